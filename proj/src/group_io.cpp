#include "pmax/group_io.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pmax/error.hpp"

namespace pmax {

using nlohmann::json;

std::string to_group_file(const PcPresentation& pres) {
  json doc;
  doc["format"] = kGroupFormat;
  doc["p"] = pres.p();
  doc["n"] = pres.n();
  if (!pres.labels().empty()) doc["labels"] = pres.labels();
  json powers = json::array();
  for (int i = 0; i < pres.n(); ++i) powers.push_back(pres.power_tail(i).to_vector());
  doc["power_tails"] = powers;
  json comms = json::array();
  for (int j = 1; j < pres.n(); ++j)
    for (int i = 0; i < j; ++i)
      comms.push_back({{"j", j + 1}, {"i", i + 1}, {"tail", pres.commutator_tail(j, i).to_vector()}});
  doc["commutator_tails"] = comms;
  return doc.dump(1) + "\n";
}

namespace {

Element row_to_element(const json& row, int n, int p, const std::string& what) {
  if (!row.is_array() || static_cast<int>(row.size()) != n)
    throw Error(ErrorKind::InvalidInput, what + ": expected " + std::to_string(n) + " entries");
  Element e(n);
  for (int k = 0; k < n; ++k) {
    const auto& v = row[static_cast<std::size_t>(k)];
    if (!v.is_number_integer()) throw Error(ErrorKind::InvalidInput, what + ": non-integer entry");
    const long long x = v.get<long long>();
    if (x < 0 || x >= p) throw Error(ErrorKind::InvalidInput, what + ": entry not in [0, p)");
    e.set(k, static_cast<int>(x));
  }
  return e;
}

}  // namespace

namespace {

PcPresentation parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("group file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::InvalidInput, "group file must be a JSON object");
  if (doc.value("format", std::string()) != kGroupFormat)
    throw Error(ErrorKind::InvalidInput, "unsupported group file format");
  if (!doc.contains("p") || !doc.contains("n") || !doc["p"].is_number_integer() ||
      !doc["n"].is_number_integer())
    throw Error(ErrorKind::InvalidInput, "group file needs integer fields p and n");
  const long long p = doc["p"].get<long long>();
  const long long n = doc["n"].get<long long>();
  if (!is_prime(p) || p < 3 || p > 61) throw Error(ErrorKind::InvalidInput, "p must be a prime in 3..61");
  if (n < 1 || n > kMaxGens) throw Error(ErrorKind::InvalidInput, "n must lie in 1..64");
  PcPresentation pres(static_cast<int>(p), static_cast<int>(n));
  const int ni = static_cast<int>(n), pi = static_cast<int>(p);

  if (doc.contains("labels")) pres.set_labels(doc["labels"].get<std::vector<std::string>>());

  const auto& powers = doc.at("power_tails");
  if (!powers.is_array() || static_cast<int>(powers.size()) != ni)
    throw Error(ErrorKind::InvalidInput, "power_tails must have n rows");
  for (int i = 0; i < ni; ++i)
    pres.set_power_tail(i, row_to_element(powers[static_cast<std::size_t>(i)], ni, pi,
                                          "power_tails row " + std::to_string(i + 1)));

  std::set<std::pair<int, int>> seen;
  if (doc.contains("commutator_tails")) {
    for (const auto& entry : doc["commutator_tails"]) {
      const int j = entry.at("j").get<int>();
      const int i = entry.at("i").get<int>();
      if (!(1 <= i && i < j && j <= ni))
        throw Error(ErrorKind::InvalidInput, "commutator pair must satisfy 1 <= i < j <= n");
      if (!seen.insert({j, i}).second) throw Error(ErrorKind::InvalidInput, "duplicate commutator pair");
      pres.set_commutator_tail(j - 1, i - 1,
                               row_to_element(entry.at("tail"), ni, pi,
                                              "commutator tail [" + std::to_string(j) + "," +
                                                  std::to_string(i) + "]"));
    }
  }
  pres.validate();
  return pres;
}

}  // namespace

PcPresentation parse_group_file(std::string_view text) {
  try {
    return parse_document(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed group file: ") + e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PcPresentation read_group_file(const std::filesystem::path& path) { return parse_group_file(read_text(path)); }

void write_group_file(const std::filesystem::path& path, const PcPresentation& pres) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  out << to_group_file(pres);
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace pmax
