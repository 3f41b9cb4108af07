// Copyright 2026 The snpassoc Authors.
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

#ifndef SNPASSOC_MODEL_IO_H_
#define SNPASSOC_MODEL_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "snpassoc/confidence.h"
#include "snpassoc/nnb.h"
#include "snpassoc/svm.h"

namespace snpassoc {

// Versioned JSON. Reading a written model gives back an equal model, and
// writing it again gives the same bytes. Malformed input throws ParseError.
inline constexpr int kModelFormatVersion = 1;

std::string svm_to_json(const SvmModel &model);
SvmModel svm_from_json(const std::string &text);

void write_model(const NeutralModel &model, std::ostream &out);
void write_model(const MmsModel &model, std::ostream &out);

// "neutral" or "mms", from the file header.
std::string model_type(std::istream &in);

NeutralModel read_neutral_model(std::istream &in);
MmsModel read_mms_model(std::istream &in);

template <typename Model>
void save_model(const Model &model, const std::filesystem::path &path);
NeutralModel load_neutral_model(const std::filesystem::path &path);
MmsModel load_mms_model(const std::filesystem::path &path);

}  // namespace snpassoc

#endif  // SNPASSOC_MODEL_IO_H_
