/* Copyright 2026 The Supersep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef SUPERSEP_EXEC_HPP_
#define SUPERSEP_EXEC_HPP_

namespace supersep {

// Every sweep kernel has a plain serial loop kept as the reference and an
// OpenMP loop. Both evaluate each sample with the same expression, so their
// results are bit-identical regardless of thread count.
enum class Exec { serial, parallel };

}  // namespace supersep

#endif  // SUPERSEP_EXEC_HPP_
