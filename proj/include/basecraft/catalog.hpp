#pragma once

#include "basecraft/actions.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace basecraft {

enum class CaseStatus { Supported, Stretch, UnsupportedExtension };
std::string status_name(CaseStatus s);

struct BuiltCase {
  PermGroup G;      // in its defining representation
  PermGroup H;      // point stabiliser, inside G
  PermGroup action; // G acting faithfully on the cosets of H
  std::optional<LabelledDomain> domain;
};

struct CaseRecord {
  std::string id;
  std::string suite;
  std::string group;
  std::string subgroup;
  unsigned expected_b = 0;
  std::string citation; // the table row this reproduces, in words
  std::string realized_extension;
  CaseStatus status = CaseStatus::Supported;
  std::size_t degree = 0;
  std::string gap; // why an unsupported row is not built
  std::function<BuiltCase()> build;
};

struct UnknownCase : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct UnsupportedCase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<CaseRecord> &case_registry();
const CaseRecord &find_case(const std::string &id);
std::vector<const CaseRecord *> suite_cases(const std::string &suite);
std::vector<std::string> suite_names();
BuiltCase build_case(const std::string &id);

// ---- generator files ----
//
//   # name: M11
//   # degree: 11
//   # order: 7920
//   # source: free text
//   (0 1 2 3 4 5 6 7 8 9 10)
//   (2 6 10 7)(3 9 4 5)
struct GeneratorFile {
  std::string name;
  std::size_t degree = 0;
  BigInt declared_order;
  std::string source;
  std::vector<Perm> gens;
};

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GeneratorFile parse_generator_file(std::istream &in);
// Refuses the file when the computed order differs from the declared one.
PermGroup ingest_generators(std::istream &in);
PermGroup ingest_generators(const std::string &path);
// BASECRAFT_DATA when set, else the data directory of the source tree.
std::string data_dir();

// ---- explicit bases in the L2(q) actions ----

struct ExplicitBaseCase {
  std::string id;
  std::string description;
  bool expected = true;
};

const std::vector<ExplicitBaseCase> &explicit_base_cases();
// Builds the named points in the labelled domain and runs is_base.
bool verify_explicit_base(const std::string &id);

// ---- full automorphism groups of the extremal parabolic actions ----

// PGL4(3) extended by the duality W -> W^perp, on the 130 planes.
Action aut_l4q3_on_planes();
// U5(2) extended by the field automorphism, on the 165 isotropic points.
Action aut_u5q2_on_isotropic_points();

} // namespace basecraft
