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

#include "snpassoc/model_io.h"

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "snpassoc/error.h"
#include "strings.h"

namespace snpassoc {
namespace {

using nlohmann::json;

constexpr const char *kFormat = "snpassoc.model";

std::uint64_t parse_hex(const std::string &text) {
  std::size_t used = 0;
  const std::uint64_t v = std::stoull(text, &used, 16);
  if (used != text.size()) throw std::invalid_argument("bad hex");
  return v;
}

json payload_to_json(const Payload &p) {
  if (const auto *v = std::get_if<SparseVector>(&p)) {
    json idx = json::array();
    json w = json::array();
    for (const auto &[i, x] : v->entries) {
      idx.push_back(i);
      w.push_back(x);
    }
    return {{"vocabulary_id", strings::hex64(v->vocabulary_id)},
            {"indices", idx},
            {"weights", w}};
  }
  return {{"tree", to_bracketed(std::get<ParseTree>(p))}};
}

Payload payload_from_json(const json &j) {
  if (j.contains("tree")) return parse_bracketed(j.at("tree").get<std::string>());
  SparseVector v;
  v.vocabulary_id = parse_hex(j.at("vocabulary_id").get<std::string>());
  const json &idx = j.at("indices");
  const json &w = j.at("weights");
  if (idx.size() != w.size()) throw std::invalid_argument("ragged payload");
  for (std::size_t k = 0; k < idx.size(); ++k) {
    v.entries.emplace_back(idx[k].get<std::uint32_t>(), w[k].get<double>());
  }
  return v;
}

json svm_json(const SvmModel &m) {
  json payloads = json::array();
  for (const Payload &p : m.payloads) payloads.push_back(payload_to_json(p));
  return {{"kernel_spec",
           {{"kind", std::string(to_string(m.kernel.kind))},
            {"lambda", m.kernel.lambda}}},
          {"C", m.C},
          {"bias", m.bias},
          {"alphas", m.alphas},
          {"labels", m.labels},
          {"payloads", payloads},
          {"vocabulary", {{"version", 1}, {"keys", m.vocabulary.keys()}}}};
}

SvmModel svm_from(const json &j) {
  SvmModel m;
  const json &spec = j.at("kernel_spec");
  const auto kind = parse_kernel_kind(spec.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown kernel kind");
  m.kernel.kind = *kind;
  m.kernel.lambda = spec.at("lambda").get<double>();
  m.C = j.at("C").get<double>();
  m.bias = j.at("bias").get<double>();
  m.alphas = j.at("alphas").get<std::vector<double>>();
  m.labels = j.at("labels").get<std::vector<int>>();
  for (const json &p : j.at("payloads")) m.payloads.push_back(payload_from_json(p));
  if (m.alphas.size() != m.labels.size() ||
      m.alphas.size() != m.payloads.size()) {
    throw std::invalid_argument("alphas, labels and payloads differ in length");
  }
  const json &vocab = j.at("vocabulary");
  if (vocab.at("version").get<int>() != 1) {
    throw std::invalid_argument("unsupported vocabulary version");
  }
  m.vocabulary = Vocabulary(vocab.at("keys").get<std::vector<std::string>>());
  m.prepare();
  return m;
}

json ovr_json(const OvrModel &m) {
  json models = json::array();
  for (const SvmModel &s : m.models) models.push_back(svm_json(s));
  return {{"classes", m.classes}, {"models", models}};
}

OvrModel ovr_from(const json &j) {
  OvrModel m;
  m.classes = j.at("classes").get<std::vector<int>>();
  for (const json &s : j.at("models")) m.models.push_back(svm_from(s));
  if (m.classes.size() != m.models.size()) {
    throw std::invalid_argument("class and model counts differ");
  }
  return m;
}

json header(const char *type) {
  return {{"format", kFormat}, {"version", kModelFormatVersion}, {"type", type}};
}

json parse_document(std::istream &in, const char *expected_type) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &e) {
    throw ParseError("model", e.what());
  }
  if (!j.is_object() || j.value("format", "") != kFormat) {
    throw ParseError("model", "not a snpassoc model file");
  }
  if (j.value("version", 0) != kModelFormatVersion) {
    throw ParseError("model", "unsupported model version");
  }
  if (expected_type != nullptr && j.value("type", "") != expected_type) {
    throw ParseError("model", std::string("expected a ") + expected_type +
                                  " model, found '" + j.value("type", "") + "'");
  }
  return j;
}

template <typename F>
auto guarded(F &&f) {
  try {
    return f();
  } catch (const json::exception &e) {
    throw ParseError("model", e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError("model", e.what());
  }
}

void emit(const json &j, std::ostream &out) { out << j.dump(1) << '\n'; }

}  // namespace

std::string svm_to_json(const SvmModel &model) {
  return svm_json(model).dump(1);
}

SvmModel svm_from_json(const std::string &text) {
  return guarded([&] { return svm_from(json::parse(text)); });
}

void write_model(const NeutralModel &model, std::ostream &out) {
  json j = header("neutral");
  j["n_max"] = model.n_max;
  j["svm"] = svm_json(model.svm);
  emit(j, out);
}

void write_model(const MmsModel &model, std::ostream &out) {
  json j = header("mms");
  j["pvalue_thresholds"] = model.buckets.thresholds();
  j["merge_high_medium"] = model.merge_high_medium;
  j["vocabulary"] = {{"version", 1}, {"keys", model.vocabulary.keys()}};
  j["ovr"] = ovr_json(model.ovr);
  emit(j, out);
}

std::string model_type(std::istream &in) {
  return parse_document(in, nullptr).value("type", "");
}

NeutralModel read_neutral_model(std::istream &in) {
  const json j = parse_document(in, "neutral");
  return guarded([&] {
    NeutralModel m;
    m.n_max = j.at("n_max").get<int>();
    m.svm = svm_from(j.at("svm"));
    return m;
  });
}

MmsModel read_mms_model(std::istream &in) {
  const json j = parse_document(in, "mms");
  return guarded([&] {
    MmsModel m;
    m.buckets = PValueBuckets(j.at("pvalue_thresholds").get<std::vector<double>>());
    m.merge_high_medium = j.at("merge_high_medium").get<bool>();
    m.vocabulary = Vocabulary(
        j.at("vocabulary").at("keys").get<std::vector<std::string>>());
    m.ovr = ovr_from(j.at("ovr"));
    return m;
  });
}

template <typename Model>
void save_model(const Model &model, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_model(model, out);
  if (!out) throw Error("write failed for " + path.string());
}

template void save_model<NeutralModel>(const NeutralModel &,
                                       const std::filesystem::path &);
template void save_model<MmsModel>(const MmsModel &,
                                   const std::filesystem::path &);

namespace {
std::ifstream open_model(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open model file");
  return in;
}
}  // namespace

NeutralModel load_neutral_model(const std::filesystem::path &path) {
  std::ifstream in = open_model(path);
  return read_neutral_model(in);
}

MmsModel load_mms_model(const std::filesystem::path &path) {
  std::ifstream in = open_model(path);
  return read_mms_model(in);
}

}  // namespace snpassoc
