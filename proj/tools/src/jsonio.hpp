#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace airystef::cli {

/// Artifact JSON is rendered by hand so identical configs give byte-identical
/// files: keys keep insertion order and every double prints as %.17g.
class Json {
 public:
  static Json number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return Json(buf);
  }

  static Json integer(long long v) { return Json(std::to_string(v)); }

  static Json boolean(bool b) { return Json(b ? "true" : "false"); }

  static Json string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += '"';
    return Json(out);
  }

  static Json array(std::vector<Json> items) {
    Json j;
    j.kind_ = Kind::kArray;
    j.items_ = std::move(items);
    return j;
  }

  static Json object(std::vector<std::pair<std::string, Json>> fields) {
    Json j;
    j.kind_ = Kind::kObject;
    j.fields_ = std::move(fields);
    return j;
  }

  [[nodiscard]] std::string dump(int depth = 0) const {
    switch (kind_) {
      case Kind::kScalar:
        return scalar_;
      case Kind::kArray: {
        if (items_.empty()) return "[]";
        std::string out = "[\n";
        for (size_t i = 0; i < items_.size(); ++i) {
          out += pad(depth + 1) + items_[i].dump(depth + 1);
          out += i + 1 < items_.size() ? ",\n" : "\n";
        }
        return out + pad(depth) + "]";
      }
      case Kind::kObject: {
        if (fields_.empty()) return "{}";
        std::string out = "{\n";
        for (size_t i = 0; i < fields_.size(); ++i) {
          out += pad(depth + 1) + string(fields_[i].first).scalar_ + ": " +
                 fields_[i].second.dump(depth + 1);
          out += i + 1 < fields_.size() ? ",\n" : "\n";
        }
        return out + pad(depth) + "}";
      }
    }
    return scalar_;
  }

 private:
  enum class Kind { kScalar, kArray, kObject };

  Json() = default;
  explicit Json(std::string scalar) : scalar_(std::move(scalar)) {}

  static std::string pad(int depth) {
    return std::string(static_cast<size_t>(depth) * 2, ' ');
  }

  Kind kind_ = Kind::kScalar;
  std::string scalar_ = "null";
  std::vector<Json> items_;
  std::vector<std::pair<std::string, Json>> fields_;
};

/// One CSV cell, same fixed-precision convention as the JSON numbers.
inline std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace airystef::cli
