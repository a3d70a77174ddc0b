// Copyright 2026 The Conesmooth Authors.
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

// Certifies the shipped smoothing kernel and writes the certificate. Exits
// non-zero, failing the build step that runs it, when the bound exceeds 16.

#include <fstream>
#include <iostream>
#include <string>

#include "conesmooth/error.h"
#include "conesmooth/kernel.h"
#include "conesmooth/report_json.h"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: certify_kernel <log.txt> <certificate.json>\n";
    return 64;
  }
  try {
    const auto certificate = conesmooth::CertifyKernel(conesmooth::SmoothingKernel::Standard(), 1e-5);
    const std::string text = conesmooth::FormatCertificate(certificate);
    std::ofstream(argv[1]) << text;
    std::ofstream(argv[2]) << conesmooth::ToJson(certificate);
    std::cout << text;
    return certificate.certified_bound <= conesmooth::kKernelBoundLimit ? 0 : 1;
  } catch (const conesmooth::Error& e) {
    std::cerr << "kernel certification failed: " << e.what() << "\n";
    std::ofstream(argv[1]) << "verdict           FAIL\n" << e.what() << "\n";
    return 1;
  }
}
