#include "eur/format.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace eur::cli {
namespace {

std::string text_value(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "none"; }
    std::string operator()(double d) const { return format_number(d); }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::ordered_json json_value(const Value& v) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double d) const {
      if (!std::isfinite(d)) return nullptr;
      return d;
    }
    nlohmann::ordered_json operator()(long long i) const { return i; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::ordered_json to_object(const Record& record) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& f : record) obj[f.key] = json_value(f.value);
  return obj;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_text(std::ostream& out, const Document& doc) {
  for (const auto& f : doc.fields) out << f.key << " = " << text_value(f.value) << '\n';
  for (std::size_t i = 0; i < doc.items.size(); ++i) {
    for (const auto& f : doc.items[i]) {
      out << doc.list_key << '.' << i << '.' << f.key << " = " << text_value(f.value) << '\n';
    }
  }
}

void write_json(std::ostream& out, const Document& doc) {
  nlohmann::ordered_json obj = to_object(doc.fields);
  if (!doc.list_key.empty()) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& item : doc.items) list.push_back(to_object(item));
    obj[doc.list_key] = std::move(list);
  }
  out << obj.dump(2) << '\n';
}

}  // namespace eur::cli
