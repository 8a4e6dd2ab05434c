#pragma once

#include <string>
#include <vector>

#include "salemscope/intpoly.hpp"

namespace salemscope {

// One reference Salem polynomial: half coefficient list a_0..a_{d/2} (the
// remaining coefficients follow by self-reciprocity), its Salem root tau, and
// the smallest exponents n for which P_n satisfies the l = 1 inequality.
struct CorpusRow {
    int id = 0;
    int degree = 0;
    std::vector<long> half;
    std::string tau;          // value as usually printed (8 decimals)
    std::string tau_precise;  // 17 significant digits
    std::vector<long> witnesses;

    IntPolynomial poly() const;  // full self-reciprocal polynomial
};

// An exhaustive hit list for one row over a closed range of exponents.
struct CorpusFrequencyScan {
    int row = 0;
    long from = 0;
    long to = 0;
    std::vector<long> hits;
    std::string note;
};

// Selected coefficients of P_n for one row, as decimal strings.
struct CorpusPowerEntry {
    long n = 0;
    std::vector<std::string> coeffs;
};

struct CorpusPowerColumns {
    int row = 0;
    std::vector<int> coeff_indices;  // which a_k each string corresponds to
    std::vector<CorpusPowerEntry> entries;
};

struct CorpusProbability {
    double p6_integral = 0.0;
    double p8_grid = 0.0;
    double p10_grid = 0.0;
};

struct Corpus {
    std::vector<CorpusRow> rows;
    std::vector<CorpusFrequencyScan> frequency_scans;
    CorpusPowerColumns power_columns;
    CorpusProbability probability;
    std::vector<std::vector<int>> cyclotomic_products;
};

// Parses the embedded golden data once and returns the shared instance.
const Corpus& corpus();

// Product of the cyclotomic polynomials with the given indices.
IntPolynomial cyclotomic_product(const std::vector<int>& indices);

}  // namespace salemscope
