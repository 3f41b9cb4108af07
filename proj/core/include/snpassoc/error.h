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

#ifndef SNPASSOC_ERROR_H_
#define SNPASSOC_ERROR_H_

#include <stdexcept>
#include <string>

namespace snpassoc {

// Base class for every data-level failure raised by the library. The CLI
// maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. `locator` is "line N" for line-oriented formats and
// an element path for XML.
class ParseError : public Error {
 public:
  ParseError(const std::string &locator, const std::string &message)
      : Error(locator + ": " + message), locator_(locator) {}
  const std::string &locator() const { return locator_; }

 private:
  std::string locator_;
};

class InvalidSpan : public Error {
 public:
  explicit InvalidSpan(const std::string &id)
      : Error("span outside sentence text (" + id + ")"), id_(id) {}
  const std::string &id() const { return id_; }

 private:
  std::string id_;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string &value)
      : Error("unknown label '" + value + "'"), value_(value) {}
  const std::string &value() const { return value_; }

 private:
  std::string value_;
};

class TooSmall : public Error {
 public:
  using Error::Error;
};

class AlignmentError : public Error {
 public:
  using Error::Error;
};

class DegenerateTrainingSet : public Error {
 public:
  using Error::Error;
};

class KernelError : public Error {
 public:
  using Error::Error;
};

}  // namespace snpassoc

#endif  // SNPASSOC_ERROR_H_
