#include "lambdag/sc_cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <unistd.h>

namespace lambdag {

std::string serialize_brackets(const LieAlgebra& L) {
  std::ostringstream out;
  out << "lie-sc v1 " << L.root_system().type_label() << ' ' << L.rank() << '\n';
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      const auto& b = L.bracket_basis(i, j);
      if (b.empty()) continue;
      out << i << ' ' << j << " :";
      for (std::size_t t = 0; t < b.size(); ++t)
        out << (t ? ", " : " ") << b[t].index << '=' << to_fraction(b[t].coeff);
      out << '\n';
    }
  return out.str();
}

LieAlgebra parse_brackets(const RootSystem& rs, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto bad = [](const std::string& why) { throw std::runtime_error("malformed lie-sc cache: " + why); };
  if (!std::getline(in, line)) bad("empty");
  {
    std::istringstream h(line);
    std::string magic, version;
    char type = 0;
    int rank = 0;
    h >> magic >> version >> type >> rank;
    if (magic != "lie-sc" || version != "v1") bad("bad header '" + line + "'");
    if (type != rs.type_label() || rank != rs.rank()) bad("header does not match " + rs.name());
  }
  const int dim = int(2 * rs.num_positive()) + rs.rank();
  std::vector<SparseG> table(std::size_t(dim) * dim);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) bad("missing ':'");
    std::istringstream head(line.substr(0, colon));
    int i = -1, j = -1;
    if (!(head >> i >> j) || i < 0 || j <= i || j >= dim) bad("bad index pair in '" + line + "'");
    SparseG terms;
    std::string rest = line.substr(colon + 1);
    std::istringstream body(rest);
    std::string item;
    while (std::getline(body, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) bad("missing '=' in '" + item + "'");
      std::istringstream ks(item.substr(0, eq));
      int k = -1;
      std::string extra;
      if (!(ks >> k) || (ks >> extra)) bad("bad term index in '" + item + "'");
      std::string val = item.substr(eq + 1);
      while (!val.empty() && val.back() == ' ') val.pop_back();
      Rational q;
      if (k < 0 || k >= dim || q.set_str(val, 10) != 0) bad("bad term '" + item + "'");
      q.canonicalize();
      terms.push_back({k, q});
    }
    SparseG neg = terms;
    for (auto& t : neg) t.coeff = -t.coeff;
    table[std::size_t(i) * dim + j] = std::move(terms);
    table[std::size_t(j) * dim + i] = std::move(neg);
  }
  return algebra_from_brackets(rs, std::move(table));
}

std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("LIE_SC_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "lambdag";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "lambdag";
  return std::filesystem::temp_directory_path() / "lambdag";
}

std::filesystem::path cache_file(const std::filesystem::path& dir, char type_label, int rank) {
  return dir / (std::string("lie-sc-") + type_label + std::to_string(rank) + ".txt");
}

void write_cache_atomically(const std::filesystem::path& file, const std::string& contents) {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(file.parent_path());
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
         << counter++;
  auto tmp = file;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

LieAlgebra load_or_build_algebra(char type_label, int rank, std::optional<std::filesystem::path> dir) {
  RootSystem rs = build_root_system(type_label, rank);
  const auto file = cache_file(dir ? *dir : default_cache_dir(), type_label, rank);
  std::error_code ec;
  if (std::filesystem::exists(file, ec)) {
    std::ifstream in(file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return parse_brackets(rs, buf.str());
    } catch (const std::exception&) {
      // fall through and rebuild
    }
  }
  LieAlgebra L = build_algebra(rs);
  try {
    write_cache_atomically(file, serialize_brackets(L));
  } catch (const std::exception&) {
  }
  return L;
}

} // namespace lambdag
