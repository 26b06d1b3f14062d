#include "nilpair/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "nilpair/homology.hpp"
#include "nilpair/invariants.hpp"

namespace nilpair::catalog {

namespace {

struct FixedRow {
  const char* name;
  int dim;
  std::vector<std::array<int, 3>> brackets;      // 1-based (i, j, k), coefficient 1
  std::vector<std::array<int, 3>> eps_brackets;  // coefficient eps
};

// Bracket tables of the fixed catalog algebras. The L_{6,26} row is the
// standard free-nilpotent presentation (3 generators, class 2); it is the
// one consistent with s(L_{6,26}) = 3 and dim L_{6,26}^2 = 3.
const std::vector<FixedRow>& fixed_rows() {
  static const std::vector<FixedRow> rows = {
      {"L_{4,3}", 4, {{1, 2, 3}, {1, 3, 4}}, {}},
      {"L_{5,5}", 5, {{1, 2, 3}, {1, 3, 5}, {2, 4, 5}}, {}},
      {"L_{5,6}", 5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}}, {}},
      {"L_{5,7}", 5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}}, {}},
      {"L_{5,8}", 5, {{1, 2, 4}, {1, 3, 5}}, {}},
      {"L_{5,9}", 5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}}, {}},
      {"L_{6,10}", 6, {{1, 2, 3}, {1, 3, 6}, {4, 5, 6}}, {}},
      {"L_{6,11}", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 6}, {2, 3, 6}, {2, 5, 6}}, {}},
      {"L_{6,12}", 6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 6}, {2, 5, 6}}, {}},
      {"L_{6,13}", 6, {{1, 2, 3}, {1, 3, 5}, {2, 4, 5}, {1, 5, 6}, {3, 4, 6}}, {}},
      {"L_{6,19}", 6, {{1, 2, 4}, {1, 3, 5}, {1, 5, 6}, {2, 4, 6}}, {{3, 5, 6}}},
      {"L_{6,20}", 6, {{1, 2, 4}, {1, 3, 5}, {1, 5, 6}, {2, 4, 6}}, {}},
      {"L_{6,21}", 6, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}, {1, 4, 6}}, {{2, 5, 6}}},
      {"L_{6,22}", 6, {{1, 2, 5}, {3, 4, 5}, {1, 3, 6}}, {{2, 4, 6}}},
      {"L_{6,23}", 6, {{1, 2, 3}, {1, 3, 5}, {2, 4, 5}, {1, 4, 6}}, {}},
      {"L_{6,24}", 6, {{1, 2, 3}, {1, 3, 5}, {2, 4, 5}, {2, 3, 6}}, {{1, 4, 6}}},
      {"L_{6,25}", 6, {{1, 2, 3}, {1, 3, 5}, {1, 4, 6}}, {}},
      {"L_{6,26}", 6, {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}}, {}},
      {"L_{6,27}", 6, {{1, 2, 3}, {1, 3, 5}, {2, 4, 6}}, {}},
      {"27A", 7, {{1, 2, 6}, {1, 4, 7}, {3, 5, 7}}, {}},
      {"27B", 7, {{1, 2, 6}, {3, 4, 6}, {1, 5, 7}, {2, 3, 7}}, {}},
      {"37A", 7, {{1, 2, 5}, {2, 3, 6}, {2, 4, 7}}, {}},
      {"37B", 7, {{1, 2, 5}, {2, 3, 6}, {3, 4, 7}}, {}},
      {"37C", 7, {{1, 2, 5}, {3, 4, 5}, {2, 3, 6}, {2, 4, 7}}, {}},
      {"37D", 7, {{1, 2, 5}, {3, 4, 5}, {1, 3, 6}, {2, 4, 7}}, {}},
      {"157", 7, {{1, 2, 3}, {1, 3, 7}, {2, 4, 7}, {5, 6, 7}}, {}},
      {"257A", 7, {{1, 2, 3}, {1, 3, 6}, {2, 4, 6}, {1, 5, 7}}, {}},
      {"257C", 7, {{1, 2, 3}, {1, 3, 6}, {2, 4, 6}, {2, 5, 7}}, {}},
      {"257F", 7, {{1, 2, 3}, {2, 3, 6}, {4, 5, 6}, {2, 4, 7}}, {}},
      {"S_1", 8, {{1, 2, 6}, {1, 4, 8}, {3, 5, 8}, {2, 7, 8}}, {}},
      {"S_2", 8, {{1, 2, 4}, {1, 3, 5}, {6, 7, 5}, {7, 8, 5}}, {}},
      {"S_3", 8, {{1, 3, 6}, {1, 2, 5}, {3, 4, 5}, {7, 8, 5}}, {}},
  };
  return rows;
}

const FixedRow* find_fixed(const std::string& canonical) {
  for (const FixedRow& row : fixed_rows())
    if (canonical == row.name) return &row;
  return nullptr;
}

LieAlgebra build_fixed(const FixedRow& row, const Rational& eps) {
  StructureConstants sc(row.dim);
  for (const auto& [i, j, k] : row.brackets) sc.add_coefficient(i - 1, j - 1, k - 1, Rational(1));
  for (const auto& [i, j, k] : row.eps_brackets) sc.add_coefficient(i - 1, j - 1, k - 1, eps);
  std::string label = row.name;
  if (!row.eps_brackets.empty()) label += "(" + eps.to_string() + ")";
  return LieAlgebra(std::move(sc), std::move(label));
}

bool is_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); });
}

long parse_int(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument(std::string("catalog: bad integer ") + what + ": '" + s + "'");
  }
}

struct Atom {
  enum class Kind { Fixed, Abelian, Heisenberg };
  Kind kind = Kind::Fixed;
  std::string name;             // canonical fixed name
  long value = 0;               // k or r
  std::optional<Rational> eps;  // inline eps
};

// "X+Y+Z" at top level; '(' ... ')' protected.
std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

Atom parse_atom(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(static_cast<char>(std::toupper(c)));
  if (text.empty()) throw std::invalid_argument("catalog: empty algebra name");

  std::string arg;
  size_t open = text.find('(');
  if (open != std::string::npos) {
    if (text.back() != ')') throw std::invalid_argument("catalog: unbalanced '(' in name: " + raw);
    arg = text.substr(open + 1, text.size() - open - 2);
    text = text.substr(0, open);
  }

  Atom atom;
  if (text == "A") {
    atom.kind = Atom::Kind::Abelian;
    if (!arg.empty()) atom.value = parse_int(arg, "k");
    else atom.value = -1;  // from params
    return atom;
  }
  if (text == "H") {
    atom.kind = Atom::Kind::Heisenberg;
    if (!arg.empty()) atom.value = parse_int(arg, "r");
    else atom.value = -1;
    return atom;
  }

  // canonicalize fixed names: L_{a,b} spellings, S_k spelling
  std::string canonical;
  if (text[0] == 'L') {
    std::vector<std::string> groups;
    std::string g;
    for (size_t i = 1; i < text.size(); ++i) {
      char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        g.push_back(c);
      } else if (c == '_' || c == ',' || c == '{' || c == '}') {
        if (!g.empty()) groups.push_back(std::move(g)), g.clear();
      } else {
        throw std::invalid_argument("catalog: unknown algebra name: " + raw);
      }
    }
    if (!g.empty()) groups.push_back(std::move(g));
    if (groups.size() != 2)
      throw std::invalid_argument("catalog: unknown algebra name: " + raw);
    canonical = "L_{" + groups[0] + "," + groups[1] + "}";
  } else if (text[0] == 'S') {
    std::string digits = text.substr(1);
    if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
    if (!is_digits(digits)) throw std::invalid_argument("catalog: unknown algebra name: " + raw);
    canonical = "S_" + digits;
  } else {
    canonical = text;
  }

  atom.kind = Atom::Kind::Fixed;
  atom.name = canonical;
  if (!arg.empty()) atom.eps = Rational::parse(arg);
  return atom;
}

long param_int(const Params& params, const std::string& key, const char* what) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument(std::string("catalog: missing parameter '") + key + "' for " + what);
  if (!it->second.is_integer())
    throw std::invalid_argument(std::string("catalog: parameter '") + key + "' must be an integer");
  return it->second.num().to_int64();
}

LieAlgebra build_atom(const Atom& atom, const Params& params) {
  switch (atom.kind) {
    case Atom::Kind::Abelian: {
      long k = atom.value >= 0 ? atom.value : param_int(params, "k", "A");
      if (k < 0) throw std::invalid_argument("catalog: A(k) needs k >= 0");
      return abelian(static_cast<int>(k));
    }
    case Atom::Kind::Heisenberg: {
      long r = atom.value >= 0 ? atom.value : param_int(params, "r", "H");
      if (r < 1) throw std::invalid_argument("catalog: H(r) needs r >= 1");
      return heisenberg(static_cast<int>(r));
    }
    case Atom::Kind::Fixed:
      break;
  }

  // L_{6,i} = L_{5,i} + A(1) for the small-dimension aliases
  if (atom.name.rfind("L_{6,", 0) == 0) {
    char last = atom.name[atom.name.size() - 2];
    if (atom.name.size() == 7 && last >= '5' && last <= '9') {
      std::string base = std::string("L_{5,") + last + "}";
      return direct_sum(build_atom(parse_atom(base), params), abelian(1));
    }
  }

  const FixedRow* row = find_fixed(atom.name);
  if (row == nullptr) throw std::invalid_argument("catalog: unknown algebra name: " + atom.name);
  Rational eps(1);
  if (atom.eps) {
    eps = *atom.eps;
  } else if (auto it = params.find("eps"); it != params.end()) {
    eps = it->second;
  }
  if (row->eps_brackets.empty() && atom.eps)
    throw std::invalid_argument("catalog: " + atom.name + " takes no parameter");
  return build_fixed(*row, eps);
}

LieAlgebra one_center_product(const LieAlgebra& a, const LieAlgebra& b) {
  SubspaceBasis za = a.center(), zb = b.center();
  if (za.rank() != 1 || zb.rank() != 1)
    throw std::invalid_argument(
        "catalog: '.' central product requires one-dimensional centers (got " +
        std::to_string(za.rank()) + " and " + std::to_string(zb.rank()) + ")");
  return central_product(a, b, {{za.vectors[0], zb.vectors[0]}});
}

}  // namespace

LieAlgebra lookup(const std::string& name, const Params& params) {
  std::vector<std::string> summands = split_top(name, '+');
  std::optional<LieAlgebra> acc;
  for (const std::string& part : summands) {
    std::optional<LieAlgebra> factor;
    for (const std::string& piece : split_top(part, '.')) {
      LieAlgebra x = build_atom(parse_atom(piece), params);
      factor = factor ? one_center_product(*factor, x) : std::move(x);
    }
    acc = acc ? direct_sum(*acc, *factor) : std::move(*factor);
  }
  return *acc;
}

std::string canonical_name(const std::string& name) {
  return lookup(name).label();
}

const std::vector<Rational>& eps_samples() {
  static const std::vector<Rational> samples = {Rational(0), Rational(1), Rational(-1),
                                                Rational(2)};
  return samples;
}

std::vector<std::string> listing_names() {
  std::vector<std::string> names;
  for (const FixedRow& row : fixed_rows()) names.push_back(row.name);
  for (int i = 5; i <= 9; ++i) names.push_back("L_{6," + std::to_string(i) + "}");
  names.insert(names.end(), {"H(1)", "H(2)", "H(3)", "H(1)+H(2)", "L_{6,10}.H(1)"});
  return names;
}

namespace {

Family fixed_family(std::string display, std::string base, int pad, int s, int d,
                    bool has_eps = false) {
  Family f;
  f.shape = Family::Shape::FixedSum;
  f.display = std::move(display);
  f.base = std::move(base);
  f.pad = pad;
  f.s = s;
  f.d = d;
  f.has_eps = has_eps;
  return f;
}

std::vector<Family> make_families() {
  std::vector<Family> fam;

  Family h1;
  h1.shape = Family::Shape::H1Padded;
  h1.base = "H(1)";
  h1.s = 0;
  h1.d = 1;
  h1.n_min = 3;
  h1.display = "H(1)+A(n-3)";
  fam.push_back(h1);

  fam.push_back(fixed_family("L_{5,8}", "L_{5,8}", 0, 1, 2));

  fam.push_back(fixed_family("L_{4,3}", "L_{4,3}", 0, 2, 2));
  fam.push_back(fixed_family("L_{5,8}+A(1)", "L_{5,8}", 1, 2, 2));
  Family hr;
  hr.shape = Family::Shape::HrPadded;
  hr.base = "H(r)";
  hr.s = 2;
  hr.d = 1;
  hr.n_min = 5;
  hr.display = "H(r)+A(n-2r-1)";
  fam.push_back(hr);

  fam.push_back(fixed_family("L_{4,3}+A(1)", "L_{4,3}", 1, 3, 2));
  fam.push_back(fixed_family("L_{5,5}", "L_{5,5}", 0, 3, 2));
  fam.push_back(fixed_family("L_{6,22}(eps)", "L_{6,22}", 0, 3, 2, true));
  fam.push_back(fixed_family("L_{6,26}", "L_{6,26}", 0, 3, 3));
  fam.push_back(fixed_family("L_{5,8}+A(2)", "L_{5,8}", 2, 3, 2));

  fam.push_back(fixed_family("L_{5,8}+A(3)", "L_{5,8}", 3, 4, 2));
  fam.push_back(fixed_family("L_{4,3}+A(2)", "L_{4,3}", 2, 4, 2));
  fam.push_back(fixed_family("L_{5,5}+A(1)", "L_{5,5}", 1, 4, 2));
  fam.push_back(fixed_family("L_{5,6}", "L_{5,6}", 0, 4, 3));
  fam.push_back(fixed_family("L_{5,7}", "L_{5,7}", 0, 4, 3));
  fam.push_back(fixed_family("L_{5,9}", "L_{5,9}", 0, 4, 3));
  fam.push_back(fixed_family("L_{6,22}(eps)+A(1)", "L_{6,22}", 1, 4, 2, true));
  fam.push_back(fixed_family("37A", "37A", 0, 4, 3));

  fam.push_back(fixed_family("L_{5,8}+A(4)", "L_{5,8}", 4, 5, 2));
  fam.push_back(fixed_family("L_{4,3}+A(3)", "L_{4,3}", 3, 5, 2));
  fam.push_back(fixed_family("L_{5,5}+A(2)", "L_{5,5}", 2, 5, 2));
  fam.push_back(fixed_family("L_{6,22}(eps)+A(2)", "L_{6,22}", 2, 5, 2, true));
  fam.push_back(fixed_family("L_{6,26}+A(1)", "L_{6,26}", 1, 5, 3));
  fam.push_back(fixed_family("L_{6,10}", "L_{6,10}", 0, 5, 2));
  fam.push_back(fixed_family("L_{6,23}", "L_{6,23}", 0, 5, 3));
  fam.push_back(fixed_family("L_{6,25}", "L_{6,25}", 0, 5, 3));
  fam.push_back(fixed_family("L_{6,27}", "L_{6,27}", 0, 5, 3));
  fam.push_back(fixed_family("37B", "37B", 0, 5, 3));
  fam.push_back(fixed_family("37D", "37D", 0, 5, 3));

  fam.push_back(fixed_family("L_{5,8}+A(5)", "L_{5,8}", 5, 6, 2));
  fam.push_back(fixed_family("L_{4,3}+A(4)", "L_{4,3}", 4, 6, 2));
  fam.push_back(fixed_family("L_{5,5}+A(3)", "L_{5,5}", 3, 6, 2));
  fam.push_back(fixed_family("L_{6,22}(eps)+A(3)", "L_{6,22}", 3, 6, 2, true));
  fam.push_back(fixed_family("L_{6,10}+A(1)", "L_{6,10}", 1, 6, 2));
  fam.push_back(fixed_family("27A", "27A", 0, 6, 2));
  fam.push_back(fixed_family("157", "157", 0, 6, 2));
  fam.push_back(fixed_family("37A+A(1)", "37A", 1, 6, 3));
  fam.push_back(fixed_family("L_{6,6}", "L_{5,6}", 1, 6, 3));
  fam.push_back(fixed_family("L_{6,7}", "L_{5,7}", 1, 6, 3));
  fam.push_back(fixed_family("L_{6,9}", "L_{5,9}", 1, 6, 3));
  fam.push_back(fixed_family("L_{6,11}", "L_{6,11}", 0, 6, 3));
  fam.push_back(fixed_family("L_{6,12}", "L_{6,12}", 0, 6, 3));
  fam.push_back(fixed_family("L_{6,19}(eps)", "L_{6,19}", 0, 6, 3, true));
  fam.push_back(fixed_family("L_{6,20}", "L_{6,20}", 0, 6, 3));
  fam.push_back(fixed_family("L_{6,24}(eps)", "L_{6,24}", 0, 6, 3, true));

  fam.push_back(fixed_family("L_{5,8}+A(6)", "L_{5,8}", 6, 7, 2));
  fam.push_back(fixed_family("L_{4,3}+A(5)", "L_{4,3}", 5, 7, 2));
  fam.push_back(fixed_family("L_{5,5}+A(4)", "L_{5,5}", 4, 7, 2));
  fam.push_back(fixed_family("L_{6,22}(eps)+A(4)", "L_{6,22}", 4, 7, 2, true));
  fam.push_back(fixed_family("27B", "27B", 0, 7, 2));
  fam.push_back(fixed_family("L_{6,10}+A(2)", "L_{6,10}", 2, 7, 2));
  fam.push_back(fixed_family("27A+A(1)", "27A", 1, 7, 2));
  fam.push_back(fixed_family("157+A(1)", "157", 1, 7, 2));
  fam.push_back(fixed_family("L_{6,10}.H(1)", "L_{6,10}.H(1)", 0, 7, 2));
  fam.push_back(fixed_family("H(1)+H(2)", "H(1)+H(2)", 0, 7, 2));
  fam.push_back(fixed_family("S_1", "S_1", 0, 7, 2));
  fam.push_back(fixed_family("S_2", "S_2", 0, 7, 2));
  fam.push_back(fixed_family("S_3", "S_3", 0, 7, 2));
  fam.push_back(fixed_family("L_{6,23}+A(1)", "L_{6,23}", 1, 7, 3));
  fam.push_back(fixed_family("L_{6,25}+A(1)", "L_{6,25}", 1, 7, 3));
  fam.push_back(fixed_family("37B+A(1)", "37B", 1, 7, 3));
  fam.push_back(fixed_family("37C+A(1)", "37C", 1, 7, 3));
  fam.push_back(fixed_family("37D+A(1)", "37D", 1, 7, 3));
  fam.push_back(fixed_family("L_{6,26}+A(2)", "L_{6,26}", 2, 7, 3));
  fam.push_back(fixed_family("L_{6,13}", "L_{6,13}", 0, 7, 3));
  fam.push_back(fixed_family("257A", "257A", 0, 7, 3));
  fam.push_back(fixed_family("257C", "257C", 0, 7, 3));
  fam.push_back(fixed_family("257F", "257F", 0, 7, 3));
  fam.push_back(fixed_family("L_{6,21}(eps)", "L_{6,21}", 0, 7, 4, true));

  for (Family& f : fam)
    if (f.shape == Family::Shape::FixedSum) f.n = lookup(f.base).dim() + f.pad;
  return fam;
}

}  // namespace

const std::vector<Family>& families() {
  static const std::vector<Family> fam = make_families();
  return fam;
}

std::vector<const Family*> families_with_s(int v) {
  if (v < 0 || v > 7) throw std::out_of_range("families_with_s: need 0 <= s <= 7");
  std::vector<const Family*> out;
  for (const Family& f : families())
    if (f.s == v) out.push_back(&f);
  return out;
}

LieAlgebra Family::instantiate(std::optional<int> total_dim, const Rational& eps, int r) const {
  switch (shape) {
    case Shape::FixedSum: {
      LieAlgebra base_alg = lookup(base, {{"eps", eps}});
      return pad > 0 ? direct_sum(base_alg, abelian(pad)) : base_alg;
    }
    case Shape::H1Padded: {
      int nn = total_dim.value_or(n_min);
      if (nn < 3) throw std::invalid_argument("H(1)+A(n-3): need n >= 3");
      return nn == 3 ? heisenberg(1) : direct_sum(heisenberg(1), abelian(nn - 3));
    }
    case Shape::HrPadded: {
      int nn = total_dim.value_or(n_min);
      if (r == 0) r = 2;
      int j = nn - 2 * r - 1;
      if (r < 2 || j < 0) throw std::invalid_argument("H(r)+A(n-2r-1): need r >= 2, n >= 2r+1");
      return j == 0 ? heisenberg(r) : direct_sum(heisenberg(r), abelian(j));
    }
  }
  throw std::logic_error("Family::instantiate: bad shape");
}

SelfCheckReport self_check(int max_dim) {
  SelfCheckReport report;
  auto check_one = [&](const Family& f, const LieAlgebra& alg, const std::string& inst) {
    SelfCheckEntry e;
    e.family = f.display;
    e.instance = inst;
    e.expected_s = f.s;
    e.expected_d = f.d;
    e.valid = alg.validate().ok() && alg.is_nilpotent();
    e.computed_d = alg.derived_subalgebra().rank();
    e.computed_s = s_invariant(alg);
    e.ok = e.valid && e.computed_s == e.expected_s && e.computed_d == e.expected_d;
    if (!e.ok) report.all_ok = false;
    report.entries.push_back(std::move(e));
  };

  for (const Family& f : families()) {
    switch (f.shape) {
      case Family::Shape::FixedSum: {
        if (*f.n > max_dim) break;
        if (f.has_eps) {
          for (const Rational& eps : eps_samples())
            check_one(f, f.instantiate(std::nullopt, eps),
                      f.base + "(" + eps.to_string() + ")" +
                          (f.pad ? "+A(" + std::to_string(f.pad) + ")" : ""));
        } else {
          check_one(f, f.instantiate(), f.display);
        }
        break;
      }
      case Family::Shape::H1Padded:
        for (int n = 3; n <= max_dim; ++n)
          check_one(f, f.instantiate(n), "H(1)+A(" + std::to_string(n - 3) + ")");
        break;
      case Family::Shape::HrPadded:
        for (int r = 2; 2 * r + 1 <= max_dim; ++r)
          for (int n = 2 * r + 1; n <= max_dim; ++n)
            check_one(f, f.instantiate(n, Rational(1), r),
                      "H(" + std::to_string(r) + ")+A(" + std::to_string(n - 2 * r - 1) + ")");
        break;
    }
  }
  return report;
}

std::vector<Instance> classification_instances(int max_dim) {
  std::vector<Instance> out;
  for (const Family& f : families()) {
    switch (f.shape) {
      case Family::Shape::FixedSum: {
        if (*f.n > max_dim) break;
        Instance inst;
        inst.family = &f;
        inst.base = f.base;
        inst.pad = f.pad;
        inst.n = *f.n;
        inst.display = f.display;
        inst.algebra = f.instantiate();
        out.push_back(std::move(inst));
        break;
      }
      case Family::Shape::H1Padded:
        for (int n = 3; n <= max_dim; ++n) {
          Instance inst;
          inst.family = &f;
          inst.base = "H(1)";
          inst.pad = n - 3;
          inst.n = n;
          inst.display = "H(1)+A(" + std::to_string(n - 3) + ")";
          inst.algebra = f.instantiate(n);
          out.push_back(std::move(inst));
        }
        break;
      case Family::Shape::HrPadded:
        for (int r = 2; 2 * r + 1 <= max_dim; ++r)
          for (int n = 2 * r + 1; n <= max_dim; ++n) {
            Instance inst;
            inst.family = &f;
            inst.base = "H(" + std::to_string(r) + ")";
            inst.pad = n - 2 * r - 1;
            inst.n = n;
            inst.display = inst.base + "+A(" + std::to_string(inst.pad) + ")";
            inst.algebra = f.instantiate(n, Rational(1), r);
            out.push_back(std::move(inst));
          }
        break;
    }
  }
  return out;
}

std::optional<long> multiplier_dim_closed_form(const std::string& descriptor) {
  std::vector<Atom> atoms;
  for (const std::string& part : split_top(descriptor, '+')) {
    if (split_top(part, '.').size() != 1) return std::nullopt;  // central products not covered
    atoms.push_back(parse_atom(part));
  }

  long abelian_total = 0;
  std::vector<const Atom*> rest;
  for (const Atom& a : atoms) {
    if (a.kind == Atom::Kind::Abelian) {
      if (a.value < 0) return std::nullopt;
      abelian_total += a.value;
    } else {
      rest.push_back(&a);
    }
  }

  if (rest.empty()) return multiplier_closed_abelian(abelian_total);
  if (rest.size() == 1 && rest[0]->kind == Atom::Kind::Heisenberg && rest[0]->value >= 1)
    return multiplier_closed_heisenberg(rest[0]->value, abelian_total);
  if (abelian_total == 0) return std::nullopt;

  std::optional<LieAlgebra> x;
  for (const Atom* a : rest) {
    LieAlgebra part = build_atom(*a, {});
    x = x ? direct_sum(*x, part) : std::move(part);
  }
  return multiplier_closed_sum_with_abelian(multiplier_dim(*x), x->dim(),
                                            x->derived_subalgebra().rank(), abelian_total);
}

}  // namespace nilpair::catalog
