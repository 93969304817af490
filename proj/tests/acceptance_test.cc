// Copyright 2026 The Schwinger Authors
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


// Runs every acceptance criterion and prints one line per criterion.

#include <cstdlib>
#include <iostream>

#include "schwinger/acceptance.h"

int main(int argc, char **argv) {
    schwinger::acceptance::Options options;
    if (argc > 1) {
        options.report_dir = argv[1];
    }
    int failed = 0;
    for (const auto &result : schwinger::acceptance::run_all(options)) {
        std::cout << schwinger::acceptance::format_line(result) << std::endl;
        failed += result.passed ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
