#pragma once

#include <string_view>
#include <vector>

#include <json.hpp>

#include "braidrep/dense.hpp"
#include "braidrep/orbit.hpp"
#include "braidrep/scalar.hpp"

namespace braidrep {

// Reference fixture for the four generator matrices of phi_3 with n = 5,
// hand-transcribed once. Convention: basis ascending lexicographic;
// matrices[k-1] is the image of tau_k; matrices are row-major, entry
// [row][col] is the coefficient of v_row in the image of v_col (rows and
// columns 0-based here, 1-based in any printed coordinates).
inline constexpr std::string_view golden_phi3_n5_json = R"JSON({
  "n": 5,
  "m": 3,
  "basis": [
    "(0,0,1,1,1)", "(0,1,0,1,1)", "(0,1,1,0,1)", "(0,1,1,1,0)", "(1,0,0,1,1)",
    "(1,0,1,0,1)", "(1,0,1,1,0)", "(1,1,0,0,1)", "(1,1,0,1,0)", "(1,1,1,0,0)"
  ],
  "matrices": [
    [
      ["1","0","0","0","0","0","0","0","0","0"],
      ["0","0","0","0","t","0","0","0","0","0"],
      ["0","0","0","0","0","t","0","0","0","0"],
      ["0","0","0","0","0","0","t","0","0","0"],
      ["0","t","0","0","0","0","0","0","0","0"],
      ["0","0","t","0","0","0","0","0","0","0"],
      ["0","0","0","t","0","0","0","0","0","0"],
      ["0","0","0","0","0","0","0","1","0","0"],
      ["0","0","0","0","0","0","0","0","1","0"],
      ["0","0","0","0","0","0","0","0","0","1"]
    ],
    [
      ["0","t","0","0","0","0","0","0","0","0"],
      ["t","0","0","0","0","0","0","0","0","0"],
      ["0","0","1","0","0","0","0","0","0","0"],
      ["0","0","0","1","0","0","0","0","0","0"],
      ["0","0","0","0","1","0","0","0","0","0"],
      ["0","0","0","0","0","0","0","t","0","0"],
      ["0","0","0","0","0","0","0","0","t","0"],
      ["0","0","0","0","0","t","0","0","0","0"],
      ["0","0","0","0","0","0","t","0","0","0"],
      ["0","0","0","0","0","0","0","0","0","1"]
    ],
    [
      ["1","0","0","0","0","0","0","0","0","0"],
      ["0","0","t","0","0","0","0","0","0","0"],
      ["0","t","0","0","0","0","0","0","0","0"],
      ["0","0","0","1","0","0","0","0","0","0"],
      ["0","0","0","0","0","t","0","0","0","0"],
      ["0","0","0","0","t","0","0","0","0","0"],
      ["0","0","0","0","0","0","1","0","0","0"],
      ["0","0","0","0","0","0","0","1","0","0"],
      ["0","0","0","0","0","0","0","0","0","t"],
      ["0","0","0","0","0","0","0","0","t","0"]
    ],
    [
      ["1","0","0","0","0","0","0","0","0","0"],
      ["0","1","0","0","0","0","0","0","0","0"],
      ["0","0","0","t","0","0","0","0","0","0"],
      ["0","0","t","0","0","0","0","0","0","0"],
      ["0","0","0","0","1","0","0","0","0","0"],
      ["0","0","0","0","0","0","t","0","0","0"],
      ["0","0","0","0","0","t","0","0","0","0"],
      ["0","0","0","0","0","0","0","0","t","0"],
      ["0","0","0","0","0","0","0","t","0","0"],
      ["0","0","0","0","0","0","0","0","0","1"]
    ]
  ]
})JSON";

struct GoldenFixture {
    int n = 0;
    int m = 0;
    std::vector<ValueTuple> basis;
    std::vector<DenseMatrix> matrices;
};

inline GoldenFixture golden_phi3_n5() {
    const nlohmann::json j = nlohmann::json::parse(golden_phi3_n5_json);
    GoldenFixture fixture;
    fixture.n = j.at("n").get<int>();
    fixture.m = j.at("m").get<int>();
    for (const auto& s : j.at("basis"))
        fixture.basis.push_back(parse_tuple(s.get<std::string>()));
    for (const auto& rows : j.at("matrices")) {
        DenseMatrix m(rows.size(), rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows.size(); ++c)
                m.at(r, c) = Scalar::parse(rows[r][c].get<std::string>());
        fixture.matrices.push_back(std::move(m));
    }
    return fixture;
}

}  // namespace braidrep
