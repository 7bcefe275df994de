// Copyright 2026 The Cardlab Authors
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

#ifndef CARDLAB_ERRORS_H_
#define CARDLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cardlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CARDLAB_DEFINE_ERROR(Name)      \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

CARDLAB_DEFINE_ERROR(UnknownNotation);
CARDLAB_DEFINE_ERROR(UnsupportedGame);
CARDLAB_DEFINE_ERROR(IllegalAction);
CARDLAB_DEFINE_ERROR(TerminalState);
CARDLAB_DEFINE_ERROR(NonTerminal);
CARDLAB_DEFINE_ERROR(BadHandSize);
CARDLAB_DEFINE_ERROR(BadCardCount);
CARDLAB_DEFINE_ERROR(DuplicateCard);
CARDLAB_DEFINE_ERROR(ParseError);
CARDLAB_DEFINE_ERROR(UnknownAction);
CARDLAB_DEFINE_ERROR(SchemaMismatch);
CARDLAB_DEFINE_ERROR(MissingField);
CARDLAB_DEFINE_ERROR(MalformedRecord);
CARDLAB_DEFINE_ERROR(InsufficientPool);
CARDLAB_DEFINE_ERROR(PolicyUnavailable);
CARDLAB_DEFINE_ERROR(DivergenceDetected);
CARDLAB_DEFINE_ERROR(Timeout);
CARDLAB_DEFINE_ERROR(TransportError);
CARDLAB_DEFINE_ERROR(EmptyResults);
CARDLAB_DEFINE_ERROR(UsageError);
CARDLAB_DEFINE_ERROR(IoError);

#undef CARDLAB_DEFINE_ERROR

}  // namespace cardlab

#endif  // CARDLAB_ERRORS_H_
