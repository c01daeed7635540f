#include <doctest.h>

#include <set>

#include "insep/verify.hpp"

using namespace insep;

TEST_CASE("tate divisibility") {
  CHECK(check_tate(20, 5).pass);
  CHECK(check_tate(7, 3).pass);
  CHECK(check_tate(5, 2).pass);
  CHECK_FALSE(check_tate(3, 5).pass);
  CHECK(check_tate(3, 7).pass);
  CHECK_FALSE(check_tate(4, 7).pass);
}

TEST_CASE("headline identity arithmetic") {
  CHECK(genus_jacobian_identity(3, 9, 3).pass);
  CHECK(genus_jacobian_identity(20, 50, 5).pass);
  CHECK(genus_jacobian_identity(0, 0, 2).pass);
  CHECK_FALSE(genus_jacobian_identity(20, 40, 5).pass);
}

TEST_CASE("fixture catalogue") {
  const auto all = corpus_fixtures();
  std::set<std::string> families;
  for (const auto& f : all) families.insert(f.family);
  CHECK(families.size() == 6);
  CHECK(find_fixture("fam1:p=3:n=2"));
  CHECK(find_fixture("fam4prime:p=3:n=2:m=4"));
  CHECK(find_fixture("fam3prime:p=2"));
  CHECK_FALSE(find_fixture("fam1:p=3:n=3"));
  CHECK_FALSE(find_fixture("fam9"));
}

TEST_CASE("fixture runs") {
  for (const char* id : {"fam1:p=3:n=2", "fam2:p=2:n=3", "fam3:p=3", "fam3prime:p=3", "fam4:p=5:n=2",
                         "fam4prime:p=3:n=2:m=4"}) {
    CAPTURE(id);
    const VerdictSet v = run_fixture(*find_fixture(id));
    for (const auto& x : v.verdicts) CHECK_MESSAGE(x.pass, std::string(x.subject + " " + x.name + ": " + x.detail));
    for (int c : {2, 3, 4, 5, 6, 7, 8, 9, 10}) CHECK(v.criterion_pass(c).value_or(false));
  }

  CHECK(check_genus_jacobian(fixture_source(*find_fixture("fam1:p=3:n=2"),
                                      fixture_field(*find_fixture("fam1:p=3:n=2"))),
                       3)
            .pass);
}

TEST_CASE("a wrong explicit R(1) fails only its cross-check") {
  Fixture fx = *find_fixture("fam4:p=3:n=2");
  fx.step2_hypersurface = "Y^4 - t_r3*Y - S^3";
  const VerdictSet v = run_fixture(fx);
  std::vector<std::string> failed;
  for (const auto& x : v.verdicts) {
    if (!x.pass) failed.push_back(x.name);
  }
  CHECK(failed == std::vector<std::string>{"second step agrees with the explicit R(1)"});
}

TEST_CASE("random normal forms and coins") {
  const VerdictSet r = run_random(3, 6, 11);
  for (const auto& x : r.verdicts) CHECK_MESSAGE(x.pass, std::string(x.subject + " " + x.name + ": " + x.detail));
  const VerdictSet c = coin_suite(9, 2, 5);
  CHECK(c.all_pass());
  CHECK(c.verdicts.size() > 20);
}
