#include <catch2/catch_amalgamated.hpp>

#include "ice20v/count20v.hpp"
#include "ice20v/jsonio.hpp"
#include "ice20v/refdata.hpp"
#include "ice20v/svg.hpp"

using namespace ice20v;

TEST_CASE("scalar codecs round-trip") {
  Int big("123456789012345678901234567890");
  CHECK(int_from_json(to_json(big)) == big);
  CHECK(int_from_json(to_json(Int(-7))) == -7);
  Rat q = make_rat(-22, 8);
  CHECK(to_json(q).get<std::string>() == "-11/4");
  CHECK(rat_from_json(to_json(q)) == q);
  CHECK(to_json(Rat(5)).get<std::string>() == "5");
}

TEST_CASE("cyclotomic codec round-trips") {
  Cyclotomic x = Cyclotomic::sqrt2(2) * Cyclotomic::from_rat(2, Rat(3, 7)) +
                 Cyclotomic::imag_unit(2);
  json j = to_json(x);
  CHECK(j["k"] == 2);
  CHECK(cyclotomic_from_json(j) == x);
  CHECK(cyclotomic_from_json(to_json(Cyclotomic(3))) == Cyclotomic(3));
}

TEST_CASE("polynomial codec round-trips") {
  PolyZ p({Int(3), Int(-14), Int(0), Int(6)});
  CHECK(poly_z_from_json(poly_to_json(p)) == p);
  CHECK(poly_to_json(PolyZ()).empty());
}

TEST_CASE("hex bit packing round-trips") {
  std::vector<std::uint8_t> bits = {1, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1};
  std::string hex = bits_to_hex(bits);
  CHECK(hex.size() == 4);
  CHECK(hex_to_bits(hex, bits.size()) == bits);
  CHECK_THROWS_AS(hex_to_bits("zz", 8), std::invalid_argument);
  CHECK_THROWS_AS(hex_to_bits("00", 20), std::invalid_argument);
}

TEST_CASE("configuration codec round-trips every small configuration") {
  for (auto kind : {BoundarySpec::Kind::DWBC1, BoundarySpec::Kind::DWBC4}) {
    auto res = enumerate_configs(BoundarySpec::square(kind, 3), 1000);
    for (const auto& c : res.configs) {
      LatticeConfig back = config_from_json(to_json(c));
      CHECK(back == c);
      CHECK(back.boundary() == c.boundary());
    }
  }
}

TEST_CASE("phase matrix json uses the seven-symbol alphabet") {
  ApmMatrix m = refdata::example_apm(4);
  json j = to_json(m);
  CHECK(j["n"] == 6);
  CHECK(j["entries"][0][0] == "-w");
  CHECK(j["entries"][5][5] == "-w2");
  CHECK(j["entries"][0][5] == "0");
  for (const char* s : {"0", "1", "-1", "w", "-w", "w2", "-w2"})
    CHECK(apm_entry_symbol(apm_entry_from_symbol(s)) == s);
}

TEST_CASE("svg output is deterministic and well-formed") {
  auto res = enumerate_configs(BoundarySpec::square(BoundarySpec::Kind::DWBC1, 3), 5);
  std::string svg1 = render_config_svg(res.configs[0]);
  std::string svg2 = render_config_svg(res.configs[0]);
  CHECK(svg1 == svg2);
  CHECK(svg1.rfind("<svg", 0) == 0);
  CHECK(svg1.find("</svg>") != std::string::npos);
  // 2n osculating paths
  std::size_t count = 0, pos = 0;
  while ((pos = svg1.find("<path", pos)) != std::string::npos) {
    ++count;
    pos += 5;
  }
  CHECK(count == 6);

  Region t2 = triangle_region(2);
  auto tilings = enumerate_tilings(t2, 10);
  REQUIRE(!tilings.empty());
  std::string tsvg = render_tiling_svg(t2, tilings[0]);
  CHECK(tsvg.find("<rect") != std::string::npos);
  std::size_t rects = 0;
  pos = 0;
  while ((pos = tsvg.find("<rect", pos)) != std::string::npos) {
    ++rects;
    pos += 5;
  }
  CHECK(rects == t2.cell_count() / 2);
}
