// Copyright (c) 2026 The tst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include "tst/codec.hpp"
#include "tst/config.hpp"
#include "tst/decimal.hpp"
#include "tst/error.hpp"
#include "tst/json_io.hpp"
#include "tst/locale.hpp"
#include "tst/pipeline.hpp"
#include "tst/scanner.hpp"
#include "tst/stats.hpp"
#include "tst/unicode.hpp"
#include "tst/vocab.hpp"
