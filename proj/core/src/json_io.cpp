#include "ubcw/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "ubcw/errors.hpp"

namespace ubcw {

using ojson = nlohmann::ordered_json;

std::string complex_to_json(const SemiSimplicialSet& X) {
  ojson j;
  j["name"] = X.name();
  j["regular"] = X.regular_flag();
  j["degrees"] = ojson::array();
  j["faces"] = ojson::array();
  for (int q = 0; q <= X.dim(); ++q) {
    ojson deg;
    deg["q"] = q;
    deg["simplices"] = X.ids(q);
    j["degrees"].push_back(std::move(deg));
  }
  for (int q = 1; q <= X.dim(); ++q) {
    for (int s = 0; s < X.count(q); ++s) {
      for (int i = 0; i <= q; ++i) {
        ojson rec;
        rec["q"] = q;
        rec["simplex"] = X.id_of(q, s);
        rec["i"] = i;
        rec["face"] = X.id_of(q - 1, X.face(q, s, i));
        j["faces"].push_back(std::move(rec));
      }
    }
  }
  return j.dump(2) + "\n";
}

SemiSimplicialSet complex_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw PreconditionError(std::string("complex JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degrees"))
    throw PreconditionError("complex JSON: missing degrees");
  SemiSimplicialSet X(j.value("name", std::string("unnamed")),
                      j.value("regular", false));
  try {
    std::vector<std::pair<int, std::vector<std::string>>> degrees;
    for (const auto& deg : j["degrees"])
      degrees.emplace_back(deg.at("q").get<int>(),
                           deg.at("simplices").get<std::vector<std::string>>());
    std::sort(degrees.begin(), degrees.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // faces keyed by (q, simplex id); each q-simplex needs entries i = 0..q.
    std::map<std::pair<int, std::string>, std::map<int, std::string>> face_of;
    if (j.contains("faces")) {
      for (const auto& rec : j["faces"]) {
        face_of[{rec.at("q").get<int>(), rec.at("simplex").get<std::string>()}]
               [rec.at("i").get<int>()] = rec.at("face").get<std::string>();
      }
    }
    for (const auto& [q, ids] : degrees) {
      for (const auto& id : ids) {
        std::vector<int> faces;
        if (q >= 1) {
          auto it = face_of.find({q, id});
          if (it == face_of.end() || static_cast<int>(it->second.size()) != q + 1)
            throw PreconditionError("complex JSON: simplex '" + id + "' in degree " +
                                    std::to_string(q) + " lacks its " +
                                    std::to_string(q + 1) + " faces");
          faces.resize(q + 1);
          for (int i = 0; i <= q; ++i) {
            auto fi = it->second.find(i);
            if (fi == it->second.end())
              throw PreconditionError("complex JSON: simplex '" + id + "' missing face " +
                                      std::to_string(i));
            int idx = X.index_of(q - 1, fi->second);
            if (idx < 0)
              throw PreconditionError("complex JSON: face '" + fi->second +
                                      "' of '" + id + "' not found in degree " +
                                      std::to_string(q - 1));
            faces[i] = idx;
          }
        }
        X.add_simplex(q, id, faces);
      }
    }
  } catch (const ojson::exception& e) {
    throw PreconditionError(std::string("complex JSON: ") + e.what());
  }
  return X;
}

std::string chain_to_json(const Chain& c) {
  ojson j;
  j["q"] = c.q;
  j["coeffs"] = ojson::array();
  for (const auto& [id, coef] : c.coeffs) {
    ojson entry = ojson::array();
    entry.push_back(id);
    entry.push_back(rat_to_string(coef));
    j["coeffs"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

Chain chain_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw PreconditionError(std::string("chain JSON parse error: ") + e.what());
  }
  Chain c;
  try {
    c.q = j.at("q").get<int>();
    for (const auto& entry : j.at("coeffs")) {
      if (!entry.is_array() || entry.size() != 2)
        throw PreconditionError("chain JSON: coeffs entries must be [id, rational]");
      std::string id = entry[0].get<std::string>();
      Rat coef = rat_from_string(entry[1].get<std::string>());
      c.set(id, c.get(id) + coef);
    }
  } catch (const ojson::exception& e) {
    throw PreconditionError(std::string("chain JSON: ") + e.what());
  }
  return c;
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw PreconditionError("write failed for '" + path + "'");
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ubcw
