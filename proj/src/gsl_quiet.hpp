// Copyright 2026 The Zeno Gate Authors
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

#ifndef ZENO_SRC_GSL_QUIET_HPP
#define ZENO_SRC_GSL_QUIET_HPP

#include <gsl/gsl_errno.h>

#include <mutex>

namespace zeno::detail {

// GSL aborts on error by default; the library reports failures through
// return codes instead.
inline void gsl_quiet() {
  static std::once_flag flag;
  std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

}  // namespace zeno::detail

#endif  // ZENO_SRC_GSL_QUIET_HPP
