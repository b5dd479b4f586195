/*
 *   Copyright 2026 The sgpd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SGPD_REPORT_HPP_
#define SGPD_REPORT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace sgpd {

  // Exit codes: 0 pass, 1 violation found, 2 input error.
  class Report {
   public:
    explicit Report(std::string verb);

    // Machine section, in insertion order.  Setting a key again replaces
    // its value in place.
    void set(std::string const& key, std::string value);
    void set(std::string const& key, std::size_t value);
    void set(std::string const& key, bool value);
    void set(std::string const& key, char const* value) {
      set(key, std::string(value));
    }
    // Human section.
    void note(std::string line);
    // Keeps the largest code seen.
    void raise_exit(int code);

    [[nodiscard]] int         exit_code() const noexcept {
      return _exit;
    }
    [[nodiscard]] std::string machine() const;
    [[nodiscard]] std::string human() const;
    [[nodiscard]] std::string json() const;
    [[nodiscard]] std::string const* find(std::string const& key) const;

   private:
    std::vector<std::pair<std::string, std::string>> _kv;
    std::vector<std::string>                         _lines;
    int                                              _exit = 0;
  };

}  // namespace sgpd

#endif  // SGPD_REPORT_HPP_
