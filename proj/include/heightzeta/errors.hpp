/*
   Copyright 2026 The heightzeta developers

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

#ifndef HEIGHTZETA_ERRORS_HPP
#define HEIGHTZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hz {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
 public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class overflow_error : public error {
 public:
    explicit overflow_error(const std::string& what) : error("overflow: " + what) {}
};

class domain_error : public error {
 public:
    explicit domain_error(const std::string& what) : error(what) {}
};

class unsupported_field_error : public error {
 public:
    explicit unsupported_field_error(const std::string& label)
        : error("unsupported field: " + label) {}
};

class pole_error : public error {
 public:
    explicit pole_error(const std::string& what) : error("pole: " + what) {}
};

class divergent_integral_error : public error {
 public:
    explicit divergent_integral_error(const std::string& what)
        : error("divergent integral: " + what) {}
};

class invalid_metric_error : public error {
 public:
    explicit invalid_metric_error(const std::string& what)
        : error("invalid metric: " + what) {}
};

class not_primitive_error : public error {
 public:
    explicit not_primitive_error(const std::string& what)
        : error("not primitive: " + what) {}
};

class ill_conditioned_error : public error {
 public:
    explicit ill_conditioned_error(const std::string& what)
        : error("ill-conditioned: " + what) {}
};

class insufficient_truncation_error : public error {
 public:
    explicit insufficient_truncation_error(const std::string& what)
        : error("insufficient truncation: " + what) {}
};

class window_error : public error {
 public:
    explicit window_error(const std::string& what)
        : error("series window: " + what) {}
};

class budget_error : public error {
 public:
    explicit budget_error(const std::string& what) : error("budget: " + what) {}
};

class io_error : public error {
 public:
    explicit io_error(const std::string& what) : error("io: " + what) {}
};

}  // namespace hz

#endif  // HEIGHTZETA_ERRORS_HPP
