#include "residua/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "residua/errors.hpp"
#include "residua/group_io.hpp"

namespace residua {

namespace fs = std::filesystem;

fs::path data_dir() {
  if (const char* env = std::getenv("RESIDUA_DATA"); env && *env) return fs::path(env);
#ifdef RESIDUA_SOURCE_DATA_DIR
  if (fs::exists(fs::path(RESIDUA_SOURCE_DATA_DIR) / "simple_groups.txt")) return fs::path(RESIDUA_SOURCE_DATA_DIR);
#endif
#ifdef RESIDUA_INSTALLED_DATA_DIR
  return fs::path(RESIDUA_INSTALLED_DATA_DIR);
#else
  return fs::path("data");
#endif
}

const SimpleGroupRecord* SimpleTable::find(std::string_view name) const {
  for (const auto& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

std::vector<const SimpleGroupRecord*> SimpleTable::with_order(std::uint64_t order) const {
  std::vector<const SimpleGroupRecord*> out;
  for (const auto& r : records)
    if (r.order == order) out.push_back(&r);
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw DataError("simple table: bad " + what + " '" + s + "'");
  return std::stoull(s);
}

}  // namespace

SimpleTable parse_simple_table(std::istream& in) {
  SimpleTable t;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == '@') {
      auto f = split(line.substr(1), '|');
      if (f.size() == 2 && f[0] == "complete_through") t.complete_through = parse_u64(f[1], "bound");
      continue;
    }
    auto f = split(line, '|');
    if (!header) {
      if (f != std::vector<std::string>{"name", "order", "out_order", "fingerprint"})
        throw DataError("simple table: unexpected header '" + line + "'");
      header = true;
      continue;
    }
    if (f.size() != 4) throw DataError("simple table: expected 4 columns in '" + line + "'");
    SimpleGroupRecord r{f[0], parse_u64(f[1], "order"), parse_u64(f[2], "out_order"), {}};
    if (!f[3].empty())
      for (const auto& x : split(f[3], ',')) r.fingerprint.push_back(parse_u64(x, "fingerprint"));
    if (r.order < 60 || r.out_order == 0) throw DataError("simple table: implausible row '" + line + "'");
    t.records.push_back(std::move(r));
  }
  if (!header) throw DataError("simple table: missing header");
  if (!std::is_sorted(t.records.begin(), t.records.end(),
                      [](const auto& a, const auto& b) { return a.order < b.order; }))
    throw DataError("simple table: rows not ascending by order");
  return t;
}

SimpleTable load_simple_table(const fs::path& dir) {
  std::ifstream in(dir / "simple_groups.txt");
  if (!in) throw DataError("cannot open " + (dir / "simple_groups.txt").string());
  return parse_simple_table(in);
}

const SimpleTable& bundled_simple_table() {
  static const SimpleTable table = load_simple_table(data_dir());
  return table;
}

PrimitiveCatalog load_primitive_catalog(const fs::path& dir, const Caps& caps) {
  PrimitiveCatalog cat;
  const fs::path pdir = dir / "primitive";
  if (!fs::is_directory(pdir)) throw DataError("missing primitive catalog directory " + pdir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(pdir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    std::ifstream in(file);
    Json doc = Json::parse(in);
    const std::size_t n = doc.at("degree").get<std::size_t>();
    auto& list = cat.by_degree[n];
    for (const auto& g : doc.at("groups")) {
      Json gdoc{{"degree", n}, {"generators", g.at("generators")}};
      PrimitiveEntry e{g.at("label").get<std::string>(), g.value("source", std::string{}),
                       g.at("order").get<std::uint64_t>(), parse_group_json(gdoc, caps).group};
      if (e.group.order() != static_cast<unsigned long>(e.order))
        throw DataError("primitive catalog " + e.label + ": order " + e.group.order().get_str() + " != recorded " +
                        std::to_string(e.order));
      if (!is_transitive(e.group)) throw DataError("primitive catalog " + e.label + ": not transitive");
      if (!is_primitive(e.group)) throw DataError("primitive catalog " + e.label + ": has a block system");
      list.push_back(std::move(e));
    }
  }
  return cat;
}

std::vector<CorpusEntry> load_corpus(const fs::path& dir, const Caps& caps) {
  const fs::path cdir = dir / "corpus";
  std::ifstream idx(cdir / "index.txt");
  if (!idx) throw DataError("missing corpus index " + (cdir / "index.txt").string());
  std::vector<CorpusEntry> out;
  std::string line;
  while (std::getline(idx, line)) {
    if (line.empty() || line[0] == '#') continue;
    GroupFile f = read_group_file(cdir / line, caps);
    if (!f.declared_order) throw DataError("corpus file " + line + " lacks a recorded order");
    out.push_back(CorpusEntry{f.name, f.note, cdir / line, f.group});
  }
  return out;
}

const CorpusEntry& corpus_entry(const std::vector<CorpusEntry>& corpus, std::string_view name) {
  for (const auto& e : corpus)
    if (e.name == name) return e;
  throw InputError("no corpus group named " + std::string(name));
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out.push_back(c);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// q = p^k with p prime; returns {p, k} or {0, 0}.
std::pair<std::uint64_t, std::uint64_t> prime_power(std::uint64_t q) {
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    if (!is_prime(p)) return {0, 0};
    std::uint64_t k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    return q == 1 ? std::pair{p, k} : std::pair<std::uint64_t, std::uint64_t>{0, 0};
  }
  return {0, 0};
}

bool parse_single_arg(const std::string& s, const std::string& prefix, std::uint64_t& q) {
  if (s.rfind(prefix, 0) != 0 || s.back() != ')') return false;
  std::string inner = s.substr(prefix.size(), s.size() - prefix.size() - 1);
  if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos) return false;
  q = std::stoull(inner);
  return true;
}

}  // namespace

std::string canonical_simple_name(std::string_view name) {
  const std::string s = strip(name);
  if (s == "PSL(2,4)" || s == "PSL(2,5)") return "A5";
  if (s == "PSL(2,9)") return "A6";
  if (s == "PSL(3,2)" || s == "GL(3,2)") return "PSL(2,7)";
  if (s == "PSL(4,2)") return "A8";
  return s;
}

bool is_minimal_simple(std::string_view name) {
  std::string s = canonical_simple_name(name);
  if (s == "A5") s = "PSL(2,4)";
  if (s == "PSL(3,3)") return true;
  std::uint64_t q = 0;
  if (parse_single_arg(s, "PSL(2,", q)) {
    auto [p, k] = prime_power(q);
    if (p == 0) return false;
    if (p == 2) return is_prime(k);
    if (p == 3) return k == 1 ? false : (is_prime(k) && k % 2 == 1);
    if (k == 1 && p > 3) return p % 5 == 2 || p % 5 == 3;
    return false;
  }
  if (parse_single_arg(s, "Sz(", q)) {
    auto [p, k] = prime_power(q);
    return p == 2 && is_prime(k) && k % 2 == 1;
  }
  return false;
}

}  // namespace residua
