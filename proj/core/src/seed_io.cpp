#include <json.hpp>
#include <sstream>

#include "ancq/seed.hpp"

namespace ancq {

std::string seed_to_json(const Seed& s) {
  nlohmann::ordered_json j;
  j["n"] = s.size();
  j["labels"] = s.labels;
  j["frozen"] = std::vector<int>(s.frozen.begin(), s.frozen.end());
  j["exchange_x2"] = s.exchange_x2;
  return j.dump();
}

Seed seed_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  int n = j.at("n").get<int>();
  Seed s = Seed::make(n);
  s.labels = j.at("labels").get<std::vector<std::string>>();
  auto fr = j.at("frozen").get<std::vector<int>>();
  for (int i = 0; i < n; ++i) s.frozen[i] = fr.at(i) != 0;
  s.exchange_x2 = j.at("exchange_x2").get<std::vector<std::vector<int>>>();
  s.validate();
  return s;
}

std::string seed_to_dot(const Seed& s) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int i = 0; i < s.size(); ++i) {
    os << "  v" << i << " [label=\"" << s.labels[i] << "\""
       << (s.frozen[i] ? ", shape=box" : "") << "];\n";
  }
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      int w2 = s.exchange_x2[i][j];
      if (w2 <= 0) continue;
      os << "  v" << i << " -> v" << j << " [";
      bool dashed = (w2 % 2 != 0);   // half-weight entries
      bool doubled = (w2 == 4);      // |eps| = 2
      if (dashed) os << "style=dashed";
      if (doubled) os << (dashed ? ", " : "") << "arrowhead=normalnormal";
      if (!dashed && !doubled && w2 != 2) os << "label=\"" << w2 << "/2\"";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ancq
