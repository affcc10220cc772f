/*
 * Copyright 2026 The qchord Authors
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

#ifndef QCHORD_TOOLS_JSON_WRITER_HPP
#define QCHORD_TOOLS_JSON_WRITER_HPP

#include <cstdio>
#include <string>
#include <vector>

namespace qchord::tools {

/// Streaming JSON emitter with a fixed field order and numbers printed
/// with 15 significant digits, so report bytes are reproducible.
class JsonWriter {
 public:
  static std::string format_number(double v) {
    if (v == 0.0) return "0";  // fold -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
  }

  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const std::string& k) {
    comma();
    out_ += '"';
    out_ += k;
    out_ += "\":";
    pending_value_ = true;
  }

  void value(double v) { raw(format_number(v)); }
  void value(int v) { raw(std::to_string(v)); }
  void value(long long v) { raw(std::to_string(v)); }
  void value(unsigned long long v) { raw(std::to_string(v)); }
  void value(bool v) { raw(v ? "true" : "false"); }
  void value(const char* s) { value(std::string(s)); }
  void value(const std::string& s) {
    std::string escaped = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') escaped += '\\';
      escaped += ch;
    }
    escaped += '"';
    raw(escaped);
  }
  void null() { raw("null"); }

  const std::string& str() const { return out_; }

 private:
  void comma() {
    if (!first_.empty() && !first_.back()) out_ += ',';
    if (!first_.empty()) first_.back() = false;
  }

  void open(char c) {
    if (!pending_value_) comma();
    pending_value_ = false;
    out_ += c;
    first_.push_back(true);
  }

  void close(char c) {
    out_ += c;
    first_.pop_back();
  }

  void raw(const std::string& s) {
    if (!pending_value_) comma();
    pending_value_ = false;
    out_ += s;
  }

  std::string out_;
  std::vector<bool> first_;
  bool pending_value_ = false;
};

}  // namespace qchord::tools

#endif  // QCHORD_TOOLS_JSON_WRITER_HPP
