#include "salemscope/corpus.hpp"

#include <json.hpp>

#include "corpus_data.hpp"

namespace salemscope {

IntPolynomial CorpusRow::poly() const {
    std::vector<mpz_class> c;
    c.reserve(static_cast<std::size_t>(degree) + 1);
    for (long v : half) c.emplace_back(v);
    const std::size_t h = half.size() - 1;  // = degree/2
    for (std::size_t k = h + 1; k <= 2 * h; ++k) c.push_back(c[2 * h - k]);
    return IntPolynomial(std::move(c));
}

namespace {

Corpus parse_corpus() {
    const nlohmann::json j = nlohmann::json::parse(kCorpusJson);
    Corpus c;

    for (const auto& jr : j.at("rows")) {
        CorpusRow row;
        row.id = jr.at("id").get<int>();
        row.degree = jr.at("degree").get<int>();
        row.half = jr.at("half").get<std::vector<long>>();
        row.tau = jr.at("tau").get<std::string>();
        row.tau_precise = jr.at("tau_precise").get<std::string>();
        row.witnesses = jr.at("witnesses").get<std::vector<long>>();
        c.rows.push_back(std::move(row));
    }

    for (const auto& js : j.at("frequency_scans")) {
        CorpusFrequencyScan scan;
        scan.row = js.at("row").get<int>();
        scan.from = js.at("from").get<long>();
        scan.to = js.at("to").get<long>();
        scan.hits = js.at("hits").get<std::vector<long>>();
        scan.note = js.value("note", std::string{});
        c.frequency_scans.push_back(std::move(scan));
    }

    const auto& jp = j.at("power_columns");
    c.power_columns.row = jp.at("row").get<int>();
    c.power_columns.coeff_indices = jp.at("coeff_indices").get<std::vector<int>>();
    for (const auto& je : jp.at("entries")) {
        CorpusPowerEntry entry;
        entry.n = je.at("n").get<long>();
        entry.coeffs = je.at("coeffs").get<std::vector<std::string>>();
        c.power_columns.entries.push_back(std::move(entry));
    }

    const auto& jprob = j.at("probability");
    c.probability.p6_integral = jprob.at("p6_integral").get<double>();
    c.probability.p8_grid = jprob.at("p8_grid").get<double>();
    c.probability.p10_grid = jprob.at("p10_grid").get<double>();

    c.cyclotomic_products = j.at("cyclotomic_products").get<std::vector<std::vector<int>>>();
    return c;
}

}  // namespace

const Corpus& corpus() {
    static const Corpus instance = parse_corpus();
    return instance;
}

IntPolynomial cyclotomic_product(const std::vector<int>& indices) {
    IntPolynomial product({1L});
    for (int k : indices) product = product * cyclotomic(k);
    return product;
}

}  // namespace salemscope
