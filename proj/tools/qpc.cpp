// SPDX-License-Identifier: Apache-2.0
#include "qpc/cli.hpp"

int main(int argc, char** argv) { return qpc::cli::run(argc, argv); }
