// Copyright 2026 The glossaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLOSSAUG_GLOSSAUG_H_
#define GLOSSAUG_GLOSSAUG_H_

#include "glossaug/augment.h"
#include "glossaug/bootstrap.h"
#include "glossaug/config.h"
#include "glossaug/corpus.h"
#include "glossaug/error.h"
#include "glossaug/lexicon.h"
#include "glossaug/llm.h"
#include "glossaug/metrics.h"
#include "glossaug/synthesis.h"
#include "glossaug/unicode.h"

#endif  // GLOSSAUG_GLOSSAUG_H_
