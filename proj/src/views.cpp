#include "rcat/views.hpp"

namespace rcat {

std::string escape_name(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '(' || ch == ')' || ch == '|' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

std::string split_object_name(const std::string& a, const std::string& e) {
  return "(" + escape_name(a) + "|" + escape_name(e) + ")";
}

std::string split_morphism_name(const std::string& f, const std::string& dom,
                                const std::string& cod) {
  return f + "@" + dom + ">" + cod;
}

}  // namespace rcat
