#include "basecraft/basesize.hpp"
#include "basecraft/catalog.hpp"

#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

using namespace basecraft;

namespace {

// Orbit of point 0 by breadth-first search over the generators.
std::size_t orbit_of_zero(const PermGroup &G) {
  std::vector<char> seen(G.degree(), 0);
  std::deque<Point> todo{0};
  seen[0] = 1;
  std::size_t n = 1;
  while (!todo.empty()) {
    Point p = todo.front();
    todo.pop_front();
    for (const auto &g : G.generators())
      if (!seen[g[p]]) {
        seen[g[p]] = 1;
        ++n;
        todo.push_back(g[p]);
      }
  }
  return n;
}

// Least k such that some k-subset is a base, from fixed point masks (n <= 64).
unsigned brute_base_size(const PermGroup &G) {
  std::set<std::uint64_t> masks;
  for (const auto &g : all_elements(G)) {
    if (g.is_identity())
      continue;
    std::uint64_t m = 0;
    for (Point p = 0; p < G.degree(); ++p)
      if (g[p] == p)
        m |= std::uint64_t{1} << p;
    masks.insert(m);
  }
  const unsigned n = static_cast<unsigned>(G.degree());
  for (unsigned k = 0; k <= n; ++k) {
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
      std::uint64_t set = 0;
      for (unsigned i = 0; i < n; ++i)
        if (pick[i])
          set |= std::uint64_t{1} << i;
      bool ok = true;
      for (auto m : masks)
        if ((m & set) == set) {
          ok = false;
          break;
        }
      if (ok)
        return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n;
}

} // namespace

TEST_CASE("registry ids are unique and well formed") {
  std::set<std::string> ids;
  for (const auto &c : case_registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK(c.id.rfind(c.suite + "/", 0) == 0);
    CHECK(c.expected_b >= 1);
    CHECK_FALSE(c.citation.empty());
    if (c.status == CaseStatus::UnsupportedExtension) {
      CHECK_FALSE(c.gap.empty());
    } else {
      CHECK(c.degree > 0);
      CHECK(static_cast<bool>(c.build));
    }
  }
  auto suites = suite_names();
  for (const char *s : {"as1", "psl2", "as3", "prod"})
    CHECK(std::find(suites.begin(), suites.end(), s) != suites.end());
  CHECK(suite_cases("all").size() == case_registry().size());
  CHECK(suite_cases("psl2").size() == 50);
}

TEST_CASE("every supported row builds a faithful transitive action") {
  for (const auto &c : case_registry()) {
    if (c.status == CaseStatus::UnsupportedExtension)
      continue;
    CAPTURE(c.id);
    BuiltCase b = c.build();
    CHECK(b.action.degree() == c.degree);
    CHECK(b.G.order() % b.H.order() == 0);
    CHECK(b.G.order() / b.H.order() == c.degree);
    CHECK(b.action.order() == b.G.order());
    CHECK(orbit_of_zero(b.action) == c.degree);
    for (const auto &h : b.H.generators())
      CHECK(b.G.contains(h));
    if (b.domain)
      CHECK(b.domain->size() == c.degree);
  }
}

TEST_CASE("small rows agree with a brute force base search") {
  int checked = 0;
  for (const auto &c : case_registry()) {
    if (c.status != CaseStatus::Supported || c.degree > 40)
      continue;
    BuiltCase b = c.build();
    if (b.action.order() > 50'000)
      continue;
    CAPTURE(c.id);
    unsigned brute = brute_base_size(b.action);
    CHECK(brute == c.expected_b);
    CHECK(exact_base_size(b.action).lo == brute);
    ++checked;
  }
  CHECK(checked >= 15);
}

TEST_CASE("unknown and unsupported ids") {
  CHECK_THROWS_AS(find_case("as1/S99/nothing"), UnknownCase);
  CHECK_THROWS_AS(build_case("as1/J2/2^(2+4):(3xS3)"), UnsupportedCase);
  CHECK(find_case("as1/J2/2^(2+4):(3xS3)").status == CaseStatus::UnsupportedExtension);
  CHECK(suite_cases("nope").empty());
}

TEST_CASE("generator file ingestion") {
  PermGroup m11 = ingest_generators(data_dir() + "/M11.gens");
  CHECK(m11.order() == 7920);
  CHECK(m11.degree() == 11);
  CHECK(ingest_generators(data_dir() + "/S7.gens").order() == 5040);
  CHECK(ingest_generators(data_dir() + "/M12.gens").order() == 95040);

  std::istringstream good("# name: A4\n# degree: 4\n# order: 12\n"
                          "# source: hand written\n(0 1 2)\n\n(1 2 3)\n");
  GeneratorFile f = parse_generator_file(good);
  CHECK(f.name == "A4");
  CHECK(f.degree == 4);
  CHECK(f.declared_order == 12);
  CHECK(f.source == "hand written");
  CHECK(f.gens.size() == 2);

  std::istringstream wrong("# name: A4\n# degree: 4\n# order: 24\n(0 1 2)\n(1 2 3)\n");
  CHECK_THROWS_AS(ingest_generators(wrong), IngestError);

  std::istringstream bad_point("# degree: 4\n# order: 2\n(0 7)\n");
  CHECK_THROWS_AS(parse_generator_file(bad_point), IngestError);
  std::istringstream no_degree("# order: 2\n(0 1)\n");
  CHECK_THROWS_AS(parse_generator_file(no_degree), IngestError);
  std::istringstream garbage("# degree: 3\n# order: 3\n(0 1 x)\n");
  CHECK_THROWS_AS(parse_generator_file(garbage), IngestError);
  CHECK_THROWS_AS(ingest_generators(std::string("/nonexistent/file.gens")), IngestError);
}

TEST_CASE("explicit bases") {
  int n = 0;
  for (const auto &e : explicit_base_cases()) {
    CAPTURE(e.id);
    CHECK(verify_explicit_base(e.id) == e.expected);
    ++n;
  }
  CHECK(n >= 20);
  // the truncated P1 set fails only where the line group is not sharply
  // 3-transitive
  CHECK_FALSE(verify_explicit_base("l2/p1-three/q16/PGammaL"));
  CHECK(verify_explicit_base("l2/p1-three/q11/PGammaL"));
}

TEST_CASE("automorphism level extremal groups") {
  Action a = aut_l4q3_on_planes();
  CHECK(a.group.degree() == 130);
  CHECK(a.group.order() == 24261120);
  Action u = aut_u5q2_on_isotropic_points();
  CHECK(u.group.degree() == 165);
  CHECK(u.group.order() == 27371520);
}
