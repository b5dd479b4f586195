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

#include "sgpd/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace sgpd {

  Report::Report(std::string verb) {
    set("verb", std::move(verb));
  }

  void Report::set(std::string const& key, std::string value) {
    auto it = std::find_if(_kv.begin(), _kv.end(),
                           [&](auto const& kv) { return kv.first == key; });
    if (it != _kv.end()) {
      it->second = std::move(value);
    } else {
      _kv.emplace_back(key, std::move(value));
    }
  }

  void Report::set(std::string const& key, std::size_t value) {
    set(key, std::to_string(value));
  }

  void Report::set(std::string const& key, bool value) {
    set(key, std::string(value ? "yes" : "no"));
  }

  void Report::note(std::string line) {
    _lines.push_back(std::move(line));
  }

  void Report::raise_exit(int code) {
    _exit = std::max(_exit, code);
  }

  std::string Report::machine() const {
    std::string out;
    for (auto const& [k, v] : _kv) {
      out += k + "=" + v + "\n";
    }
    out += "exit_code=" + std::to_string(_exit) + "\n";
    return out;
  }

  std::string Report::human() const {
    std::string out;
    for (auto const& l : _lines) {
      out += l + "\n";
    }
    return out;
  }

  std::string Report::json() const {
    nlohmann::ordered_json j;
    for (auto const& [k, v] : _kv) {
      j[k] = v;
    }
    j["exit_code"] = _exit;
    return j.dump(2) + "\n";
  }

  std::string const* Report::find(std::string const& key) const {
    for (auto const& [k, v] : _kv) {
      if (k == key) {
        return &v;
      }
    }
    return nullptr;
  }

}  // namespace sgpd
