/*
   Copyright 2026 The jackkernel authors

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

namespace jk {

// Failure classes surfaced through the library.  Each maps to one error code
// at the C API boundary; inside the library they are thrown as jk::Error.
enum class Errc {
    ring_mismatch,    // operands live in incompatible coefficient rings
    inexact_division, // quotient does not lie in the ring
    pole,             // substitution hit a vanishing denominator
    parse,            // malformed input string
    limit,            // a configured size guard was exceeded
    internal_check    // a structural invariant failed (signals a bug)
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace jk
