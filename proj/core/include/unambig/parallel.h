// Copyright 2026 The unambig Authors
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


#ifndef UNAMBIG_PARALLEL_H_
#define UNAMBIG_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace unambig {

/// Worker count: UNAMBIG_THREADS when set to a positive integer, otherwise
/// std::thread::hardware_concurrency(), never less than 1.
std::size_t thread_count();

/// Calls body(i) for every i in [0, n), spread over thread_count() workers.
/// Callers write results into per-index slots, so the outcome does not
/// depend on scheduling. The first exception thrown by a body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace unambig

#endif  // UNAMBIG_PARALLEL_H_
