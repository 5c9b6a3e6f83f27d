#include "basecraft/catalog.hpp"
#include "basecraft/basesize.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#ifndef BASECRAFT_DEFAULT_DATA
#define BASECRAFT_DEFAULT_DATA "data"
#endif

namespace basecraft {

std::string status_name(CaseStatus s) {
  switch (s) {
  case CaseStatus::Supported:
    return "supported";
  case CaseStatus::Stretch:
    return "stretch";
  case CaseStatus::UnsupportedExtension:
    return "unsupported-extension";
  }
  return "?";
}

// ---- generator files ----

std::string data_dir() {
  if (const char *env = std::getenv("BASECRAFT_DATA"); env && *env)
    return env;
  return BASECRAFT_DEFAULT_DATA;
}

namespace {

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

} // namespace

GeneratorFile parse_generator_file(std::istream &in) {
  GeneratorFile f;
  bool have_degree = false, have_order = false;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty())
      continue;
    if (line[0] != '#') {
      lines.push_back(line);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos)
      continue;
    std::string key = trim(line.substr(1, colon - 1));
    std::string val = trim(line.substr(colon + 1));
    try {
      if (key == "name") {
        f.name = val;
      } else if (key == "degree") {
        f.degree = std::stoul(val);
        have_degree = true;
      } else if (key == "order") {
        f.declared_order = BigInt(val);
        have_order = true;
      } else if (key == "source") {
        f.source = val;
      }
    } catch (const std::exception &) {
      throw IngestError("bad header value for '" + key + "'");
    }
  }
  if (!have_degree || !have_order)
    throw IngestError("generator file needs degree and order headers");
  for (const auto &l : lines) {
    try {
      f.gens.push_back(Perm::parse(l, f.degree));
    } catch (const std::exception &e) {
      throw IngestError("cannot parse generator '" + l + "': " + e.what());
    }
  }
  return f;
}

PermGroup ingest_generators(std::istream &in) {
  GeneratorFile f = parse_generator_file(in);
  PermGroup g(f.degree, f.gens);
  BigInt got = g.order();
  if (got != f.declared_order)
    throw IngestError("declared order " + f.declared_order.get_str() +
                      " but the generators give " + got.get_str());
  return g;
}

PermGroup ingest_generators(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw IngestError("cannot open " + path);
  return ingest_generators(in);
}

namespace {

// ---- small permutation group constructions ----

Perm cycle_perm(const std::vector<Point> &pts, std::size_t n) {
  return Perm::from_cycles({pts}, n);
}

std::vector<Perm> sym_on(const std::vector<Point> &pts, std::size_t n) {
  if (pts.size() < 2)
    return {};
  return {cycle_perm({pts[0], pts[1]}, n), cycle_perm(pts, n)};
}

std::vector<Point> range(Point a, Point b) {
  std::vector<Point> v(b - a);
  std::iota(v.begin(), v.end(), a);
  return v;
}

// S_a x S_b x ... on consecutive blocks
PermGroup young(std::size_t n, const std::vector<Point> &sizes) {
  std::vector<Perm> gens;
  Point at = 0;
  for (Point s : sizes) {
    for (auto &g : sym_on(range(at, at + s), n))
      gens.push_back(std::move(g));
    at += s;
  }
  return PermGroup(n, std::move(gens));
}

// S_a wr S_b preserving the blocks {ia, ..., ia + a - 1}
PermGroup wreath(Point a, Point b) {
  const std::size_t n = std::size_t{a} * b;
  std::vector<Perm> gens = sym_on(range(0, a), n);
  std::vector<Point> shift(n), swap(n);
  for (Point i = 0; i < n; ++i) {
    shift[i] = (i + a) % n;
    swap[i] = i < 2 * a ? (i + a) % (2 * a) : i;
  }
  gens.emplace_back(shift);
  gens.emplace_back(swap);
  return PermGroup(n, std::move(gens));
}

PermGroup even_part(const PermGroup &H) {
  return subgroup_filter(H, [](const Perm &x) { return x.is_even(); });
}

BuiltCase on_cosets(PermGroup G, PermGroup H) {
  BuiltCase b{G, H, coset_action(G, H).action.group, std::nullopt};
  return b;
}

// AGL2(3) on the 9 points x + 3y of GF(3)^2
PermGroup agl23() {
  auto pt = [](int x, int y) { return static_cast<Point>(((x % 3 + 3) % 3) + 3 * ((y % 3 + 3) % 3)); };
  auto affine = [&](int a, int b, int c, int d, int tx, int ty) {
    std::vector<Point> img(9);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        img[pt(x, y)] = pt(a * x + c * y + tx, b * x + d * y + ty);
    return Perm(img);
  };
  return PermGroup(9, {affine(1, 0, 0, 1, 1, 0), affine(1, 1, 0, 1, 0, 0),
                       affine(1, 0, 1, 1, 0, 0), affine(2, 0, 0, 1, 0, 0)});
}

// AGL1(p) on p points
PermGroup agl1(unsigned p, unsigned mu) {
  std::vector<Point> t(p), m(p);
  for (unsigned x = 0; x < p; ++x) {
    t[x] = (x + 1) % p;
    m[x] = (x * mu) % p;
  }
  return PermGroup(p, {Perm(t), Perm(m)});
}

PermGroup ingested(const std::string &file) {
  return ingest_generators(data_dir() + "/" + file);
}

PermGroup sym_or_alt(const std::string &name, std::size_t n) {
  return name[0] == 'S' ? PermGroup::symmetric(n) : PermGroup::alternating(n);
}

// ---- Mathieu subgroups ----

PermGroup m12_involution_centraliser(const PermGroup &m12) {
  Rng rng(12);
  for (int tries = 0; tries < 10000; ++tries) {
    Perm x = m12.random_element(rng);
    // an involution with four fixed points, found as a power
    auto ord = x.order();
    if (ord % 2 != 0)
      continue;
    Perm y = x.pow(static_cast<long>(to_u64(ord / 2)));
    if (y.fixed_points() != 4)
      continue;
    return subgroup_filter(m12, [&](const Perm &g) { return g * y == y * g; });
  }
  throw std::logic_error("no involution with four fixed points found");
}

PermGroup m12_c4c4_normaliser(const PermGroup &m12) {
  Rng rng(44);
  for (int tries = 0; tries < 1000; ++tries) {
    Perm a = m12.random_element(rng);
    if (a.order() != 4)
      continue;
    PermGroup C = subgroup_filter(m12, [&](const Perm &g) { return g * a == a * g; });
    for (const auto &b : all_elements(C)) {
      if (b.order() != 4)
        continue;
      PermGroup A(12, {a, b});
      if (A.order() != 16)
        continue;
      // C4 x C4: abelian of order 16 with exactly 3 involutions
      int inv = 0;
      for (const auto &e : all_elements(A))
        inv += e.prime_order() == 2;
      if (inv != 3)
        continue;
      PermGroup N = normaliser(m12, A);
      if (N.order() == 192 && N.is_transitive())
        return N;
    }
  }
  throw std::logic_error("no transitive C4 x C4 normaliser found");
}

// ---- classical actions ----

Action l4q3_planes(bool aut);
Action u5q2_points(bool aut);

BuiltCase from_action(const Action &a) {
  BuiltCase b{a.group, a.group.pointwise_stabiliser({0}), a.group, a.domain};
  return b;
}

// ---- L2(q) ----

struct L2Tag {
  std::string tag;
  bool delta;
  unsigned phi;
};

L2Tag l2_tag(unsigned q, const std::string &tag) {
  if (tag == "L2")
    return {tag, false, 0};
  if (tag == "PGL")
    return {tag, true, 0};
  if (tag == "L2.2")
    return {tag, false, 2};
  if (tag == "L2.3")
    return {tag, false, 1};
  if (tag == "PGammaL")
    return {tag, q % 2 == 1, 1};
  throw std::invalid_argument("unknown L2 extension tag " + tag);
}

L2Subgroup l2_type(const std::string &t) {
  if (t == "p1")
    return L2Subgroup::P1;
  if (t == "split")
    return L2Subgroup::SplitNormaliser;
  if (t == "nonsplit")
    return L2Subgroup::NonsplitNormaliser;
  if (t == "subfield")
    return L2Subgroup::Subfield;
  if (t == "octahedral")
    return L2Subgroup::Octahedral;
  throw std::invalid_argument("unknown L2 subgroup type " + t);
}

BuiltCase l2_case(unsigned q, const std::string &tag, const std::string &type) {
  L2Tag t = l2_tag(q, tag);
  auto s = l2_on_projective_line(L2Group{q, t.delta, t.phi});
  PermGroup H = l2_subgroup(s, l2_type(type));
  return on_cosets(s.line.group, H);
}

// ---- registry ----

struct Row {
  std::string id;
  unsigned b;
  std::size_t degree;
  std::string group, subgroup, realized, citation;
  CaseStatus status;
  std::function<BuiltCase()> build;
  std::string gap = "";
};

std::vector<CaseRecord> make_registry() {
  using S = CaseStatus;
  std::vector<Row> rows;
  auto natural = [](std::string g, std::size_t n, std::function<PermGroup()> h,
                    bool alt_part = false) {
    return [=]() {
      PermGroup G = sym_or_alt(g, n);
      PermGroup H = h();
      if (alt_part)
        H = even_part(H);
      return on_cosets(G, H);
    };
  };
  const char *alt_cite = "alternating socle, soluble H with b > 2";
  rows.push_back({"as1/A5/A4", 3, 5, "A5", "A4", "A5", alt_cite, S::Supported, [] {
                    PermGroup H(5, {Perm::parse("(0 1 2)", 5), Perm::parse("(1 2 3)", 5)});
                    return on_cosets(PermGroup::alternating(5), H);
                  }});
  rows.push_back({"as1/A5/D10", 3, 6, "A5", "D10", "A5", alt_cite, S::Supported, [] {
                    PermGroup H(5, {Perm::parse("(0 1 2 3 4)", 5),
                                    Perm::parse("(1 4)(2 3)", 5)});
                    return on_cosets(PermGroup::alternating(5), H);
                  }});
  rows.push_back({"as1/S5/S4", 4, 5, "S5", "S4", "S5", alt_cite, S::Supported,
                  natural("S", 5, [] { return young(5, {4, 1}); })});
  rows.push_back({"as1/S5/S3xS2", 3, 10, "S5", "S3 x S2", "S5", alt_cite, S::Supported,
                  natural("S", 5, [] { return young(5, {3, 2}); })});
  rows.push_back({"as1/S5/5:4", 3, 6, "S5", "5:4", "S5", alt_cite, S::Supported,
                  natural("S", 5, [] { return agl1(5, 2); })});
  for (std::string g : {"A6", "S6"}) {
    bool alt = g[0] == 'A';
    unsigned b = alt ? 3 : 4;
    auto sub = [&](const std::string &h) { return alt ? "(" + h + ") cap A6" : h; };
    rows.push_back({"as1/" + g + "/S4xS2", b, 15, g, sub("S4 x S2"), g, alt_cite,
                    S::Supported, natural(g, 6, [] { return young(6, {4, 2}); }, alt)});
    rows.push_back({"as1/" + g + "/S2wrS3", b, 15, g, sub("S2 wr S3"), g, alt_cite,
                    S::Supported, natural(g, 6, [] { return wreath(2, 3); }, alt)});
    rows.push_back({"as1/" + g + "/S3wrS2", b, 10, g, sub("S3 wr S2"), g, alt_cite,
                    S::Supported, natural(g, 6, [] { return wreath(3, 2); }, alt)});
  }
  rows.push_back({"as1/S7/S4xS3", 3, 35, "S7", "S4 x S3", "S7", alt_cite, S::Supported,
                  natural("S", 7, [] { return young(7, {4, 3}); })});
  rows.push_back({"as1/A7/S4xS3", 3, 35, "A7", "(S4 x S3) cap A7", "A7", alt_cite,
                  S::Supported, natural("A", 7, [] { return young(7, {4, 3}); }, true)});
  rows.push_back({"as1/S8/S4wrS2", 5, 35, "S8", "S4 wr S2", "S8",
                  "the unique alternating-socle case with b = 5", S::Supported,
                  natural("S", 8, [] { return wreath(4, 2); })});
  rows.push_back({"as1/S8/S2wrS4", 3, 105, "S8", "S2 wr S4", "S8", alt_cite, S::Supported,
                  natural("S", 8, [] { return wreath(2, 4); })});
  rows.push_back({"as1/A8/S4wrS2", 4, 35, "A8", "(S4 wr S2) cap A8", "A8", alt_cite,
                  S::Supported, natural("A", 8, [] { return wreath(4, 2); }, true)});
  rows.push_back({"as1/S9/S3wrS3", 3, 280, "S9", "S3 wr S3", "S9", alt_cite, S::Supported,
                  natural("S", 9, [] { return wreath(3, 3); })});
  rows.push_back({"as1/S9/AGL2(3)", 3, 840, "S9", "AGL2(3)", "S9", alt_cite, S::Supported,
                  natural("S", 9, agl23)});
  rows.push_back({"as1/A9/S3wrS3", 3, 280, "A9", "(S3 wr S3) cap A9", "A9", alt_cite,
                  S::Supported, natural("A", 9, [] { return wreath(3, 3); }, true)});
  for (std::string g : {"S12", "A12"}) {
    bool alt = g[0] == 'A';
    std::string file = g + ".gens";
    for (auto [a, b] : {std::pair<Point, Point>{3, 4}, {4, 3}}) {
      std::string sub = "S" + std::to_string(a) + " wr S" + std::to_string(b);
      std::string key = "S" + std::to_string(a) + "wrS" + std::to_string(b);
      std::size_t deg = a == 3 ? 15400 : 5775;
      rows.push_back({"as1/" + g + "/" + key, 3, deg, g,
                      alt ? "(" + sub + ") cap A12" : sub, g, alt_cite, S::Supported,
                      [file, alt, a = a, b = b] {
                        PermGroup G = ingested(file);
                        PermGroup H = wreath(a, b);
                        if (alt)
                          H = even_part(H);
                        return on_cosets(G, H);
                      }});
    }
  }
  const char *spor = "sporadic socle, soluble H with b > 2";
  rows.push_back({"as1/M11/M9:2", 3, 55, "M11", "3^2:Q8.2", "M11", spor, S::Supported, [] {
                    PermGroup G = ingested("M11.gens");
                    return on_cosets(G, set_stabiliser(G, {0, 1}));
                  }});
  rows.push_back({"as1/M12/3^2:2S4", 3, 220, "M12", "3^2:2S4", "M12", spor, S::Supported, [] {
                    PermGroup G = ingested("M12.gens");
                    return on_cosets(G, set_stabiliser(G, {0, 1, 2}));
                  }});
  rows.push_back({"as1/M12/2^(1+4):S3", 3, 495, "M12", "2^(1+4):S3", "M12", spor,
                  S::Supported, [] {
                    PermGroup G = ingested("M12.gens");
                    return on_cosets(G, m12_involution_centraliser(G));
                  }});
  rows.push_back({"as1/M12/4^2:D12", 3, 495, "M12", "4^2:D12", "M12", spor, S::Supported, [] {
                    PermGroup G = ingested("M12.gens");
                    return on_cosets(G, m12_c4c4_normaliser(G));
                  }});
  auto gap = [&](std::string id, unsigned b, std::string g, std::string h,
                 std::string why) {
    rows.push_back({id, b, 0, g, h, "none", alt_cite, S::UnsupportedExtension,
                    nullptr, why});
  };
  const char *a6 = "needs the exceptional outer automorphisms of A6; not constructed";
  gap("as1/A6.2^2/AGL1(9).2", 4, "A6.2^2", "AGL1(9).2", a6);
  gap("as1/A6.2^2/D20.2", 3, "A6.2^2", "D20.2", a6);
  gap("as1/A6.2^2/[32]", 3, "A6.2^2", "[32]", a6);
  gap("as1/PGL2(9)/D20", 3, "PGL2(9)", "D20", a6);
  gap("as1/PGL2(9)/3^2:Q8", 3, "PGL2(9)", "3^2:Q8", a6);
  gap("as1/M10/AGL1(9)", 3, "M10", "AGL1(9)", a6);
  const char *big16 = "action degree 2627625 exceeds the 10^6 degree budget";
  gap("as1/S16/S4wrS4", 3, "S16", "S4 wr S4", big16);
  gap("as1/A16/S4wrS4", 3, "A16", "(S4 wr S4) cap A16", big16);
  const char *nogens = "generators for this group are not shipped";
  gap("as1/M12.2/2^(1+4):S3.2", 3, "M12.2", "2^(1+4):S3.2", nogens);
  gap("as1/M12.2/4^2:D12.2", 3, "M12.2", "4^2:D12.2", nogens);
  gap("as1/M12.2/3^(1+2):D8", 3, "M12.2", "3^(1+2):D8", nogens);
  gap("as1/J2/2^(2+4):(3xS3)", 3, "J2", "2^(2+4):(3 x S3)", nogens);
  gap("as1/J2.2/2^(2+4):(3xS3).2", 3, "J2.2", "2^(2+4):(3 x S3).2", nogens);
  gap("as1/Fi22/3^(1+6):2^(3+4):3^2:2", 3, "Fi22", "3^(1+6):2^(3+4):3^2:2", nogens);
  gap("as1/Fi22.2/3^(1+6):2^(3+4):3^2:2.2", 3, "Fi22.2", "3^(1+6):2^(3+4):3^2:2.2", nogens);
  gap("as1/Fi23/3^(1+8).2^(1+6).3^(1+2).2S4", 3, "Fi23",
      "3^(1+8).2^(1+6).3^(1+2).2S4", nogens);

  // L2(q): (q, extension tag, subgroup type, expected b, degree)
  struct L2Row {
    unsigned q;
    const char *tag, *type;
    unsigned b;
    std::size_t degree;
  };
  const L2Row l2rows[] = {
      {7, "L2", "p1", 3, 8},          {7, "PGL", "p1", 3, 8},
      {7, "PGL", "split", 2, 28},     {7, "PGL", "nonsplit", 3, 21},
      {7, "L2", "octahedral", 3, 7},
      {8, "L2", "p1", 3, 9},          {8, "PGammaL", "p1", 4, 9},
      {8, "L2", "split", 2, 36},      {8, "PGammaL", "split", 3, 36},
      {8, "L2", "nonsplit", 3, 28},   {8, "PGammaL", "nonsplit", 3, 28},
      {11, "L2", "p1", 3, 12},        {11, "PGL", "p1", 3, 12},
      {11, "PGL", "split", 2, 66},
      {11, "L2", "nonsplit", 2, 55},  {11, "PGL", "nonsplit", 3, 55},
      {11, "PGL", "octahedral", 2, 55},
      {13, "L2", "p1", 3, 14},        {13, "PGL", "p1", 3, 14},
      {13, "L2", "split", 2, 91},     {13, "PGL", "split", 2, 91},
      {13, "L2", "nonsplit", 2, 78},  {13, "PGL", "nonsplit", 3, 78},
      {13, "L2", "octahedral", 2, 91}, {13, "PGL", "octahedral", 2, 91},
      {16, "L2", "p1", 3, 17},        {16, "L2.2", "p1", 4, 17},
      {16, "PGammaL", "p1", 4, 17},
      {16, "L2", "split", 2, 136},    {16, "L2.2", "split", 3, 136},
      {16, "PGammaL", "split", 3, 136},
      {16, "L2", "nonsplit", 3, 120}, {16, "L2.2", "nonsplit", 3, 120},
      {16, "PGammaL", "nonsplit", 3, 120},
      {27, "L2", "p1", 3, 28},        {27, "PGL", "p1", 3, 28},
      {27, "L2.3", "p1", 4, 28},      {27, "PGammaL", "p1", 4, 28},
      {27, "L2", "split", 2, 378},    {27, "PGL", "split", 2, 378},
      {27, "L2.3", "split", 2, 378},  {27, "PGammaL", "split", 3, 378},
      {27, "L2", "nonsplit", 2, 351}, {27, "PGL", "nonsplit", 3, 351},
      {27, "L2.3", "nonsplit", 2, 351}, {27, "PGammaL", "nonsplit", 3, 351},
      {27, "L2", "subfield", 2, 819}, {27, "PGL", "subfield", 2, 819},
      {27, "L2.3", "subfield", 2, 819}, {27, "PGammaL", "subfield", 2, 819},
  };
  for (const auto &r : l2rows) {
    L2Tag t = l2_tag(r.q, r.tag);
    L2Group spec{r.q, t.delta, t.phi};
    std::string type = r.type;
    const char *cite =
        type == "p1" ? "L2(q), H = P1: b = 3 iff G <= PGL2(q) or G is sharply 3-transitive, else 4"
        : type == "split" ? "L2(q), H of type GL1(q) wr S2: b = 3 iff PGL2(q) < G, else 2"
        : type == "nonsplit" ? "L2(q), H of type GL1(q^2): b = 3 iff PGL2(q) <= G, else 2"
        : type == "subfield" ? "L2(q), q = 3^k, H of type GL2(3): b = 2"
                             : "L2(p), H of type 2^(1+2).O2-(2): b = 2 + delta(7,p)";
    std::string id = "psl2/q" + std::to_string(r.q) + "/" + type + "/" + r.tag;
    unsigned q = r.q;
    std::string tag = r.tag;
    rows.push_back({id, r.b, r.degree, spec.name(), l2_subgroup_name(l2_type(type)),
                    spec.name(), cite, S::Supported,
                    [q, tag, type] { return l2_case(q, tag, type); }});
  }

  const char *ext = "b = 5 for every G with this socle and point stabiliser";
  rows.push_back({"as3/L4q3/P2", 5, 130, "L4(3)", "P2", "L4(3) (socle only)", ext,
                  S::Supported, [] { return from_action(l4q3_planes(false)); }});
  rows.push_back({"as3/L4q3/P2/Aut", 5, 130, "Aut(L4(3))", "P2",
                  "PGL4(3) extended by the duality, order 24261120", ext,
                  S::Supported, [] { return from_action(l4q3_planes(true)); }});
  rows.push_back({"as3/U5q2/P1", 5, 165, "U5(2)", "P1", "U5(2) (socle only)", ext,
                  S::Supported, [] { return from_action(u5q2_points(false)); }});
  rows.push_back({"as3/U5q2/P1/Aut", 5, 165, "Aut(U5(2))", "P1",
                  "U5(2) extended by the field automorphism, order 27371520", ext,
                  S::Supported, [] { return from_action(u5q2_points(true)); }});

  const char *prod = "product action L wr C2 with b(L) extremal";
  rows.push_back({"prod/S5wrC2", 5, 25, "S5 wr C2", "S4 wr C2", "S5 wr C2", prod,
                  S::Supported, [] {
                    PermGroup G = product_action(PermGroup::symmetric(5),
                                                 PermGroup::cyclic(2));
                    return BuiltCase{G, G.pointwise_stabiliser({0}), G, std::nullopt};
                  }});
  rows.push_back({"prod/S8-35wrC2", 5, 1225, "S8 wr C2", "(S4 wr S2) wr C2",
                  "S8 on 35 points, wr C2", prod, S::Supported, [] {
                    PermGroup L = on_cosets(PermGroup::symmetric(8), wreath(4, 2)).action;
                    PermGroup G = product_action(L, PermGroup::cyclic(2));
                    return BuiltCase{G, G.pointwise_stabiliser({0}), G, std::nullopt};
                  }});

  std::vector<CaseRecord> out;
  for (auto &r : rows) {
    CaseRecord c;
    c.id = r.id;
    c.suite = c.id.substr(0, c.id.find('/'));
    c.group = r.group;
    c.subgroup = r.subgroup;
    c.expected_b = r.b;
    c.citation = r.citation;
    c.realized_extension = r.realized;
    c.status = r.status;
    c.degree = r.degree;
    c.gap = r.gap;
    c.build = r.build;
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace

const std::vector<CaseRecord> &case_registry() {
  static const std::vector<CaseRecord> reg = make_registry();
  return reg;
}

const CaseRecord &find_case(const std::string &id) {
  for (const auto &c : case_registry())
    if (c.id == id)
      return c;
  throw UnknownCase("unknown case id: " + id);
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto &c : case_registry())
    if (std::find(out.begin(), out.end(), c.suite) == out.end())
      out.push_back(c.suite);
  return out;
}

std::vector<const CaseRecord *> suite_cases(const std::string &suite) {
  std::vector<const CaseRecord *> out;
  for (const auto &c : case_registry())
    if (suite == "all" || c.suite == suite)
      out.push_back(&c);
  return out;
}

BuiltCase build_case(const std::string &id) {
  const CaseRecord &c = find_case(id);
  if (c.status == CaseStatus::UnsupportedExtension || !c.build)
    throw UnsupportedCase(id + ": " + c.gap);
  return c.build();
}

// ---- classical actions ----

namespace {

// W^perp for the standard dot product, by enumerating GF(q)^n.
std::vector<std::uint32_t> perp_label(const std::vector<std::uint32_t> &label,
                                      const Field &F, unsigned n) {
  auto basis = subspace_basis(label, n);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i)
    total *= F.q();
  std::vector<Vec> perp;
  for (std::uint64_t c = 1; c < total && perp.size() < n - basis.size(); ++c) {
    Vec v(n);
    std::uint64_t x = c;
    for (auto &e : v) {
      e = static_cast<FCode>(x % F.q());
      x /= F.q();
    }
    bool ok = true;
    for (const auto &b : basis) {
      FCode s = 0;
      for (unsigned i = 0; i < n; ++i)
        s = F.add(s, F.mul(b[i], v[i]));
      if (s != 0) {
        ok = false;
        break;
      }
    }
    if (!ok)
      continue;
    auto trial = perp;
    trial.push_back(v);
    if (rref(trial, F) == perp.size() + 1)
      perp.push_back(v);
  }
  return subspace_label(perp, F);
}

} // namespace

namespace {

Action l4q3_planes(bool aut) {
  auto cg = classical_generators(MatGroupSpec::parse(aut ? "GL-4-3" : "SL-4-3"));
  Action a = subspace_action(linear(cg.gens), *cg.field, 4, 2,
                             SubspaceConstraint::All);
  if (!aut) {
    a.group.set_order_bound(classical_order(cg.spec) / 2);
    return a;
  }
  std::vector<Point> img(a.domain.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    long j = a.domain.find(perp_label(a.domain.labels[i], *cg.field, 4));
    if (j < 0)
      throw std::logic_error("perpendicular plane missing from the domain");
    img[i] = static_cast<Point>(j);
  }
  auto gens = a.group.generators();
  gens.emplace_back(img);
  PermGroup G(a.domain.size(), std::move(gens));
  G.set_order_bound(classical_order(cg.spec)); // |GL4(3)| / 2 * 2
  a.group = G;
  return a;
}

Action u5q2_points(bool aut) {
  auto cg = classical_generators(MatGroupSpec::parse("SU-5-2"));
  auto gens = linear(cg.gens);
  if (aut)
    gens.emplace_back(Matrix::identity(*cg.field, 5), 1);
  Action a = subspace_action(gens, *cg.field, 5, 1,
                             SubspaceConstraint::TotallyIsotropic, &cg.form);
  a.group.set_order_bound(classical_order(cg.spec) * (aut ? 2 : 1));
  return a;
}

} // namespace

Action aut_l4q3_on_planes() { return l4q3_planes(true); }
Action aut_u5q2_on_isotropic_points() { return u5q2_points(true); }

// ---- explicit bases ----

namespace {

struct ExplicitSpec {
  std::string kind; // p1-four, p1-three, pairs-three, pairs-two, unitary-two
  unsigned q;
  std::string tag;
};

ExplicitSpec parse_explicit(const std::string &id) {
  // l2/<kind>/q<q>/<tag>
  std::vector<std::string> parts;
  std::stringstream ss(id);
  for (std::string p; std::getline(ss, p, '/');)
    parts.push_back(p);
  if (parts.size() != 4 || parts[0] != "l2" || parts[2].size() < 2 ||
      parts[2][0] != 'q')
    throw UnknownCase("unknown explicit base id: " + id);
  return {parts[1], static_cast<unsigned>(std::stoul(parts[2].substr(1))),
          parts[3]};
}

Point line_point(const L2Setting &s, const Vec &v) {
  long j = s.line.domain.find(subspace_label({v}, s.spec.field()));
  if (j < 0)
    throw std::logic_error("point missing from the projective line");
  return static_cast<Point>(j);
}

Point pair_point(const Action &pairs, Point a, Point b) {
  long j = pairs.domain.find({std::min(a, b), std::max(a, b)});
  if (j < 0)
    throw std::logic_error("pair missing from the pair action");
  return static_cast<Point>(j);
}

// SU2(q) for the form x1 y1^q + x2 y2^q, as [[a, b], [-b^q, a^q]] with
// a^(q+1) + b^(q+1) = 1; random such matrices until they generate.
std::vector<SemilinearMap> su2_orthonormal(unsigned q) {
  const Field &F = Field::of_order(q * q);
  auto norm = [&](FCode x) { return F.pow(x, q + 1); };
  std::vector<std::pair<FCode, FCode>> all;
  for (FCode a = 0; a < F.q(); ++a)
    for (FCode b = 1; b < F.q(); ++b)
      if (F.add(norm(a), norm(b)) == 1)
        all.emplace_back(a, b);
  Rng rng(q);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<SemilinearMap> gens;
  const BigInt target = BigInt(q) * (q * q - 1) / (q % 2 ? 2 : 1);
  for (const auto &[a, b] : all) {
    gens.emplace_back(Matrix(F, 2, {a, b, F.neg(F.pow(b, q)), F.pow(a, q)}));
    if (gens.size() < 2)
      continue;
    auto line = subspace_action(gens, F, 2, 1, SubspaceConstraint::All);
    if (line.group.order() == target)
      return gens;
  }
  throw std::logic_error("SU2 generators not found");
}

bool unitary_two(unsigned q, const std::string &tag) {
  const Field &F = Field::of_order(q * q);
  auto gens = su2_orthonormal(q);
  if (tag == "L2.3" || tag == "L2.2")
    gens.emplace_back(Matrix::identity(F, 2), 1);
  else if (tag != "L2")
    throw UnknownCase("unitary model realised for L2 and field extensions only");
  auto line = subspace_action(gens, F, 2, 1, SubspaceConstraint::All);
  auto pt = [&](FCode x, FCode y) {
    long j = line.domain.find(subspace_label({Vec{x, y}}, F));
    if (j < 0)
      throw std::logic_error("point missing from the unitary line");
    return static_cast<Point>(j);
  };
  const FCode lam = F.primitive();
  Point u = pt(1, 0), v = pt(0, 1);
  Action omega = subset_action(line.group, 2, {u, v});
  if (omega.domain.size() != std::size_t{q} * (q - 1) / 2)
    throw std::logic_error("unexpected size of the orthogonal pair domain");
  // beta = { <u + lam v>, <u - lam^(-q) v> }
  Point b1 = pt(1, lam);
  Point b2 = pt(1, F.neg(F.inv(F.pow(lam, q))));
  Point alpha = pair_point(omega, u, v);
  Point beta = pair_point(omega, b1, b2);
  return is_base(omega.group, {alpha, beta});
}

} // namespace

const std::vector<ExplicitBaseCase> &explicit_base_cases() {
  static const std::vector<ExplicitBaseCase> cases = [] {
    std::vector<ExplicitBaseCase> v;
    const std::vector<std::pair<unsigned, std::vector<std::string>>> groups = {
        {11, {"L2", "PGL"}}, {13, {"L2", "PGL"}}, {16, {"L2", "L2.2", "PGammaL"}}};
    for (const auto &[q, tags] : groups)
      for (const auto &t : tags) {
        std::string qs = "/q" + std::to_string(q) + "/" + t;
        bool field_aut = t == "L2.2" || t == "PGammaL" || t == "L2.3";
        if (q % 2 == 1 && t == "PGammaL")
          field_aut = false;
        v.push_back({"l2/p1-four" + qs,
                     "<e1>, <e2>, <e1+e2>, <e1+mu e2> on the projective line", true});
        v.push_back({"l2/p1-three" + qs,
                     "<e1>, <e2>, <e1+e2>: a base iff G <= PGL2(q) here", !field_aut});
        v.push_back({"l2/pairs-three" + qs,
                     "{<e1>,<e2>}, {<e1>,<e1+e2>}, {<e1>,<e1+mu e2>} on pairs", true});
      }
    for (unsigned q : {11u, 13u})
      v.push_back({"l2/pairs-two/q" + std::to_string(q) + "/L2",
                   "{<e1>,<e2>}, {<e1-e2>,<e1+mu e2>} on pairs, G cap PGL2(q) = L2(q)",
                   true});
    v.push_back({"l2/pairs-two/q27/L2.3",
                 "{<e1>,<e2>}, {<e1-e2>,<e1+mu e2>} on pairs, G = L2(27).3", true});
    for (unsigned q : {11u, 13u})
      v.push_back({"l2/unitary-two/q" + std::to_string(q) + "/L2",
                   "{<u>,<v>}, {<u+lam v>,<u-lam^-q v>} in the unitary model", true});
    v.push_back({"l2/unitary-two/q27/L2.3",
                 "unitary model pair base for L2(27).3", true});
    v.push_back({"l2/unitary-two/q16/L2",
                 "even q: L2(16) = PGL2(16) has no base of size 2 here", false});
    return v;
  }();
  return cases;
}

bool verify_explicit_base(const std::string &id) {
  ExplicitSpec e = parse_explicit(id);
  if (e.kind == "unitary-two")
    return unitary_two(e.q, e.tag);
  L2Tag t = l2_tag(e.q, e.tag);
  auto s = l2_on_projective_line(L2Group{e.q, t.delta, t.phi});
  const Field &F = s.spec.field();
  const FCode mu = F.primitive();
  if (e.kind == "p1-four")
    return is_base(s.line.group, {s.e1, s.e2, s.e1pe2, s.e1pmue2});
  if (e.kind == "p1-three")
    return is_base(s.line.group, {s.e1, s.e2, s.e1pe2});
  Action pairs = subset_action(s.line.group, 2);
  Point alpha = pair_point(pairs, s.e1, s.e2);
  if (e.kind == "pairs-three")
    return is_base(pairs.group, {alpha, pair_point(pairs, s.e1, s.e1pe2),
                                 pair_point(pairs, s.e1, s.e1pmue2)});
  if (e.kind == "pairs-two") {
    Point e1me2 = line_point(s, Vec{1, F.neg(1)});
    Point e1pmue2 = line_point(s, Vec{1, mu});
    return is_base(pairs.group, {alpha, pair_point(pairs, e1me2, e1pmue2)});
  }
  throw UnknownCase("unknown explicit base kind: " + e.kind);
}

} // namespace basecraft
