#pragma once

#include <string>
#include <vector>

#include "covgpd/covering.hpp"
#include "covgpd/morphism.hpp"

namespace covgpd::fixtures {

/// One object, identity only.
GroupoidPtr t1();
/// Codiscrete groupoid on {x, y}.
GroupoidPtr i2();
/// One-object groupoids of Z2, Z4 and S3. Arrow names are the element names.
GroupoidPtr c2();
GroupoidPtr c4();
GroupoidPtr s3();

struct NamedGroupoid {
  std::string name;
  GroupoidPtr groupoid;
};
/// T1, I2, C4, S3.
std::vector<NamedGroupoid> bases();

struct NamedCovering {
  std::string name;
  Covering covering;
};
/// covering_from_subgroup at object 0 for every subgroup of every base.
std::vector<NamedCovering> subgroup_covers();

/// The ⟨(12)⟩ and ⟨(123)⟩ subgroups of π(S3).
Subgroup s3_transposition();
Subgroup s3_rotation();

/// Discrete covering of T1 with n objects.
Covering points(std::size_t n);

}  // namespace covgpd::fixtures
