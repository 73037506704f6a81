#include <gtest/gtest.h>

#include <filesystem>

#include "pmax/blackburn.hpp"
#include "pmax/error.hpp"
#include "pmax/group_io.hpp"
#include "pmax/maxclass.hpp"

using namespace pmax;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_group_file(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorKind::TheoremViolation;
}

}  // namespace

TEST(GroupIo, RoundTripBlackburn) {
  for (auto [p, n] : {std::pair{3, 5}, {5, 7}, {7, 9}}) {
    const PcPresentation pres = blackburn_presentation(p, n);
    const std::string text = to_group_file(pres);
    EXPECT_EQ(parse_group_file(text), pres);
    EXPECT_EQ(to_group_file(parse_group_file(text)), text);
  }
}

TEST(GroupIo, RoundTripSearchedGroupThroughDisk) {
  auto found = search_nonmetabelian(5, 8, 1, 1'000'000);
  ASSERT_TRUE(found.found);
  const auto path = std::filesystem::temp_directory_path() / "pmax_io_roundtrip.grp";
  write_group_file(path, *found.found);
  EXPECT_EQ(read_group_file(path), *found.found);
  std::filesystem::remove(path);
}

TEST(GroupIo, MissingPairsAreTrivial) {
  const std::string text = R"({"format": "pmax-pcgroup/1", "p": 3, "n": 3,
    "power_tails": [[0,0,0],[0,0,0],[0,0,0]],
    "commutator_tails": [{"j": 2, "i": 1, "tail": [0,0,1]}]})";
  const PcPresentation pres = parse_group_file(text);
  EXPECT_EQ(pres.commutator_tail(1, 0), Element::generator(3, 2));
  EXPECT_TRUE(pres.commutator_tail(2, 0).is_identity());
  EXPECT_TRUE(PcGroup(pres).consistency_check().passed);
}

TEST(GroupIo, RejectsMalformedFiles) {
  const std::string rows = R"("power_tails": [[0,0,0],[0,0,0],[0,0,0]])";
  EXPECT_EQ(kind_of("not json"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"format": "other", "p": 3, "n": 3, )" + rows + "}"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"format": "pmax-pcgroup/1", "p": 4, "n": 3, )" + rows + "}"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"format": "pmax-pcgroup/1", "p": 3, "n": 3})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"format": "pmax-pcgroup/1", "p": 3, "n": 3, "power_tails": [[0,0,0]]})"),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"format": "pmax-pcgroup/1", "p": 3, "n": 3, "power_tails": [[0,0,3],[0,0,0],[0,0,0]]})"),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"format": "pmax-pcgroup/1", "p": 3, "n": 3, )" + rows +
                    R"(, "commutator_tails": [{"j": 1, "i": 2, "tail": [0,0,1]}]})"),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of(R"({"format": "pmax-pcgroup/1", "p": 3, "n": 3, )" + rows +
                    R"(, "commutator_tails": [{"j": 2, "i": 1, "tail": [0,0,1]}, {"j": 2, "i": 1, "tail": [0,0,1]}]})"),
            ErrorKind::InvalidInput);
  // weighted support: [a2, a1] may not involve a2
  EXPECT_EQ(kind_of(R"({"format": "pmax-pcgroup/1", "p": 3, "n": 3, )" + rows +
                    R"(, "commutator_tails": [{"j": 2, "i": 1, "tail": [0,1,0]}]})"),
            ErrorKind::InvalidInput);
}

TEST(GroupIo, DigestIsStable) {
  EXPECT_EQ(digest_hex(""), "cbf29ce484222325");
  EXPECT_EQ(digest_hex("a"), "af63dc4c8601ec8c");
  const std::string text = to_group_file(blackburn_presentation(5, 7));
  EXPECT_EQ(digest_hex(text), digest_hex(to_group_file(blackburn_presentation(5, 7))));
}
