// Copyright 2026 The lexsafe Authors
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

#ifndef LEXSAFE_ERRORS_HPP_
#define LEXSAFE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lexsafe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad preference, broken budget identity,
// ill-formed graph, etc.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class InvalidPreference : public InvalidInstance {
 public:
  InvalidPreference(const std::string& what, std::string label)
      : InvalidInstance(what), label_(std::move(label)) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

// A Jordan map whose +-1 games do not have exactly one winner.
class InvalidMap : public InvalidInstance {
 public:
  using InvalidInstance::InvalidInstance;
};

// Neither player wins some +-1 game: the game form is not tight.
class NotTight : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// Raised when a guarantee that holds for every tight form fails; indicates
// a backend bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexsafe

#endif  // LEXSAFE_ERRORS_HPP_
