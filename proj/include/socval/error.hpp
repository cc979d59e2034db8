/*
Copyright 2026 The socval Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace socval {

// Every failure raised by the library derives from Error. The CLI maps the
// concrete type onto its exit code.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
  public:
    using Error::Error;
};

class IndexError : public Error {
  public:
    using Error::Error;
};

// Inputs that are individually well formed but disagree with each other,
// e.g. a nonzero delta for an isolated node or a covariate table bound to a
// different graph.
class InconsistentInputError : public Error {
  public:
    using Error::Error;
};

class UnsupportedFamilyError : public Error {
  public:
    using Error::Error;
};

class UndefinedStatisticError : public Error {
  public:
    using Error::Error;
};

class SingularFitError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

// Readable file whose content violates its documented format.
class FormatError : public Error {
  public:
    using Error::Error;
};

} // namespace socval
