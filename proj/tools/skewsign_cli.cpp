// skewsign command line: exact recognition of sign-scaling skew-symmetry
// for {0,1,-1} matrices, with certificates and odd-rank witnesses, plus the
// supporting rank / Schur-complement / counterexample utilities.
//
// Exit codes: 0 = property holds or certificate valid, 1 = property fails
// (witness or reason printed), 2 = input or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "skewsign/skewsign.hpp"

using namespace skewsign;
using nlohmann::json;

namespace {

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long long v = std::stoull(item, &pos);
        if (pos != item.size()) throw InputError("bad index '" + item + "' in list");
        out.push_back(v);
    }
    if (out.empty()) throw InputError("empty index list");
    return out;
}

std::string join_signs(const std::vector<int>& signs) {
    std::string out;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(signs[i]);
    }
    return out;
}

template <ScalarType F>
std::string join_scalars(const std::vector<F>& scalars) {
    std::string out;
    for (std::size_t i = 0; i < scalars.size(); ++i) {
        if (i) out += ' ';
        out += scalars[i].to_string();
    }
    return out;
}

std::string join_indices(const IndexSet& idx) {
    std::string out;
    for (std::size_t i : idx.indices()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(i);
    }
    return out;
}

json witness_json(const OddWitness& w) {
    return json{{"indices", w.indices.indices()}, {"rank", w.observed_rank}};
}

void print_witness(const OddWitness& w) {
    std::cout << "witness-indices: " << join_indices(w.indices) << "\n";
    std::cout << "witness-rank: " << w.observed_rank << "\n";
}

int cmd_rank(const std::string& file, bool as_json) {
    AnyMatrix m = read_matrix_file(file);
    std::size_t r = std::visit([](const auto& mat) { return rank(mat); }, m);
    if (as_json) {
        std::cout << json{{"verdict", "ok"}, {"rank", r}} << "\n";
    } else {
        std::cout << r << "\n";
    }
    return 0;
}

int cmd_schur(const std::string& file, const std::string& block_list, bool guttman) {
    AnyMatrix m = read_matrix_file(file);
    IndexSet block(parse_index_list(block_list));
    return std::visit(
        [&](const auto& mat) {
            if (guttman) {
                auto rep = guttman_check(mat, block);
                std::cout << "rank-full: " << rep.rank_full << "\n";
                std::cout << "rank-block: " << rep.rank_block << "\n";
                std::cout << "rank-schur: " << rep.rank_schur << "\n";
                std::cout << "additivity: " << (rep.holds ? "ok" : "violated") << "\n";
                return rep.holds ? 0 : 1;
            }
            write_matrix(std::cout, schur_complement(mat, block));
            return 0;
        },
        m);
}

int cmd_even_check(const std::string& file, long long sample, std::uint64_t seed,
                   std::size_t max_n, bool as_json) {
    AnyMatrix m = read_matrix_file(file);
    CheckMode mode = sample > 0 ? CheckMode::sampled(static_cast<std::size_t>(sample), seed)
                                : CheckMode::exhaustive(max_n);
    EvenRankVerdict verdict =
        std::visit([&](const auto& mat) { return check_all_principal_even(mat, mode); }, m);
    const char* mode_name = mode.kind == CheckMode::Kind::exhaustive ? "exhaustive" : "sampled";
    if (as_json) {
        json out{{"verdict", verdict.all_even ? "all-even" : "odd"},
                 {"mode", mode_name},
                 {"subsets-checked", verdict.subsets_checked}};
        if (verdict.witness) out["witness"] = witness_json(*verdict.witness);
        std::cout << out << "\n";
    } else {
        std::cout << "verdict: " << (verdict.all_even ? "all-even" : "odd") << "\n";
        std::cout << "mode: " << mode_name << "\n";
        std::cout << "subsets-checked: " << verdict.subsets_checked << "\n";
        if (verdict.witness) print_witness(*verdict.witness);
    }
    return verdict.all_even ? 0 : 1;
}

int cmd_recognize(const std::string& file, bool as_json) {
    AnyMatrix m = read_matrix_file(file);
    SignRecognition rec =
        std::visit([](const auto& mat) { return recognize_sign(mat); }, m);
    if (as_json) {
        json out{{"verdict", rec.accepted ? "accept" : "reject"}};
        if (rec.certificate) {
            out["certificate"] = {{"row_signs", rec.certificate->row_signs},
                                  {"col_signs", rec.certificate->col_signs}};
        }
        if (rec.witness) out["witness"] = witness_json(*rec.witness);
        std::cout << out << "\n";
    } else if (rec.accepted) {
        std::cout << "verdict: accept\n";
        std::cout << "row-signs: " << join_signs(rec.certificate->row_signs) << "\n";
        std::cout << "col-signs: " << join_signs(rec.certificate->col_signs) << "\n";
    } else {
        std::cout << "verdict: reject\n";
        print_witness(*rec.witness);
    }
    return rec.accepted ? 0 : 1;
}

int cmd_scale_recognize(const std::string& file, bool as_json) {
    AnyMatrix m = read_matrix_file(file);
    return std::visit(
        [&](const auto& mat) {
            auto rec = recognize_general_scaling(mat);
            if (as_json) {
                json out{{"verdict", rec.accepted ? "accept" : "reject"}};
                if (rec.certificate) {
                    std::vector<std::string> rows, cols;
                    for (const auto& s : rec.certificate->row_scalars) rows.push_back(s.to_string());
                    for (const auto& s : rec.certificate->col_scalars) cols.push_back(s.to_string());
                    out["certificate"] = {{"row_scalars", rows}, {"col_scalars", cols}};
                }
                if (rec.reject) {
                    out["reason"] = rec.reject->reason;
                    if (!rec.reject->cycle.empty()) out["cycle"] = rec.reject->cycle;
                }
                std::cout << out << "\n";
            } else if (rec.accepted) {
                std::cout << "verdict: accept\n";
                std::cout << "row-scalars: " << join_scalars(rec.certificate->row_scalars) << "\n";
                std::cout << "col-scalars: " << join_scalars(rec.certificate->col_scalars) << "\n";
            } else {
                std::cout << "verdict: reject\n";
                std::cout << "reason: " << rec.reject->reason << "\n";
            }
            return rec.accepted ? 0 : 1;
        },
        m);
}

template <ScalarType F>
int run_lemma(const FieldSpec& f, std::size_t n, long long a, long long b, long long c) {
    LemmaParams<F> params{n, from_integer<F>(a, f), from_integer<F>(b, f), from_integer<F>(c, f)};
    bool predicted_even = lemma_parity_predicate(params);
    Matrix<F> m = build_lemma_matrix(params);
    std::size_t r = rank(m);
    write_matrix(std::cout, m);
    std::cout << "# predicted-parity: " << (predicted_even ? "even" : "odd") << "\n";
    std::cout << "# rank: " << r << "\n";
    std::cout << "# actual-parity: " << (r % 2 == 0 ? "even" : "odd") << "\n";
    return 0;
}

int cmd_lemma(std::size_t n, long long a, long long b, long long c, const std::string& field) {
    FieldSpec f = parse_field_designator(field);
    if (f.is_prime_field()) return run_lemma<Fp>(f, n, a, b, c);
    return run_lemma<Rational>(f, n, a, b, c);
}

template <ScalarType F>
F parse_scalar_flag(const std::string& text, const FieldSpec& f) {
    std::istringstream in("field " + f.to_string() + "\nsize 1\n" + text + "\n");
    AnyMatrix m = read_matrix(in);
    return std::get<Matrix<F>>(m)(0, 0);
}

int cmd_counterexample_remark1(const std::string& field, const std::string& a_text,
                               const std::string& b_text) {
    FieldSpec f = parse_field_designator(field);
    auto run = [&](auto report) {
        std::cout << "field: " << report.field.to_string() << "\n";
        std::cout << "a: " << report.a.to_string() << "\n";
        std::cout << "b: " << report.b.to_string() << "\n";
        std::cout << "all-principal-even: " << (report.all_principal_even ? "true" : "false")
                  << "\n";
        std::cout << "whole-scalable: " << (report.whole_scalable ? "true" : "false") << "\n";
        std::cout << "strict-submatrices-scalable: "
                  << (report.strict_submatrices_scalable ? "true" : "false") << "\n";
        return 0;
    };
    if (f.is_prime_field()) {
        Fp a = parse_scalar_flag<Fp>(a_text, f);
        Fp b = parse_scalar_flag<Fp>(b_text, f);
        return run(remark1_validate<Fp>(f, a, b));
    }
    Rational a = parse_scalar_flag<Rational>(a_text, f);
    Rational b = parse_scalar_flag<Rational>(b_text, f);
    return run(remark1_validate<Rational>(f, a, b));
}

template <ScalarType F>
int run_remark2(const FieldSpec& f) {
    Matrix<F> m = remark2_matrix<F>(f);
    write_matrix(std::cout, m);
    std::cout << "is-skew-symmetric: " << (is_skew_symmetric(m) ? "true" : "false") << "\n";
    SignRecognition rec = recognize_sign(m);
    std::cout << "recognizer-verdict: " << (rec.accepted ? "accept" : "reject") << "\n";
    if (rec.accepted) {
        std::cout << "row-signs: " << join_signs(rec.certificate->row_signs) << "\n";
        std::cout << "col-signs: " << join_signs(rec.certificate->col_signs) << "\n";
    }
    SignCertificate classic{{1, 1, -1, 1}, {-1, 1, 1, 1}}; // negate column 1 and row 3
    bool classic_valid = is_skew_symmetric(apply_certificate(m, classic));
    std::cout << "col1-row3-certificate-valid: " << (classic_valid ? "true" : "false") << "\n";
    return 0;
}

int cmd_counterexample_remark2(const std::string& field) {
    FieldSpec f = parse_field_designator(field);
    if (f.is_prime_field()) return run_remark2<Fp>(f);
    return run_remark2<Rational>(f);
}

int cmd_verify(const std::string& file, const std::string& cert_file, bool as_json) {
    AnyMatrix m = read_matrix_file(file);
    return std::visit(
        [&]<class MatT>(const MatT& mat) {
            using F = std::decay_t<decltype(mat(0, 0))>;
            std::string reason;
            bool valid = false;
            try {
                auto cert = read_certificate_file<F>(cert_file, mat.field(), mat.rows());
                valid = is_skew_symmetric(apply_certificate(mat, cert));
                if (!valid) reason = "scaled matrix is not skew-symmetric";
            } catch (const ZeroScalarError& e) {
                valid = false;
                reason = e.what();
            }
            if (as_json) {
                json out{{"verdict", valid ? "valid" : "invalid"}};
                if (!reason.empty()) out["reason"] = reason;
                std::cout << out << "\n";
            } else {
                std::cout << "verdict: " << (valid ? "valid" : "invalid") << "\n";
                if (!reason.empty()) std::cout << "reason: " << reason << "\n";
            }
            return valid ? 0 : 1;
        },
        m);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certifying recognizer for sign-scaling skew-symmetry of {0,1,-1} matrices"};
    app.require_subcommand(1);

    std::string file, block_list, cert_file, field = "q";
    std::string a_text = "-1", b_text = "2";
    bool as_json = false, guttman = false;
    long long sample = 0;
    std::uint64_t seed = 0;
    std::size_t max_n = 24;
    std::size_t lemma_n = 3;
    long long lemma_a = 1, lemma_b = -1, lemma_c = 1;

    auto* rank_cmd = app.add_subcommand("rank", "print the exact rank of a matrix file");
    rank_cmd->add_option("file", file, "matrix file")->required();
    rank_cmd->add_flag("--json", as_json, "JSON output");

    auto* schur_cmd = app.add_subcommand("schur", "Schur complement on a principal block");
    schur_cmd->add_option("file", file, "matrix file")->required();
    schur_cmd->add_option("--block", block_list, "1-based indices of the block, e.g. 1,2")
        ->required();
    schur_cmd->add_flag("--guttman", guttman, "print the three ranks and the additivity check");

    auto* even_cmd =
        app.add_subcommand("even-check", "do all principal submatrices have even rank?");
    even_cmd->add_option("file", file, "matrix file")->required();
    even_cmd->add_option("--sample", sample, "check this many random subsets instead");
    even_cmd->add_option("--seed", seed, "seed for sampled mode");
    even_cmd->add_option("--max-n", max_n, "exhaustive size guard (default 24)");
    even_cmd->add_flag("--json", as_json, "JSON output");

    auto* rec_cmd = app.add_subcommand("recognize", "sign-scaling skew-symmetrizability");
    rec_cmd->add_option("file", file, "matrix file")->required();
    rec_cmd->add_flag("--json", as_json, "JSON output");

    auto* scale_cmd =
        app.add_subcommand("scale-recognize", "skew-symmetrizability by arbitrary nonzero scalars");
    scale_cmd->add_option("file", file, "matrix file")->required();
    scale_cmd->add_flag("--json", as_json, "JSON output");

    auto* lemma_cmd = app.add_subcommand("lemma", "build a banded family member and its parity");
    lemma_cmd->add_option("--n", lemma_n, "size, n >= 3")->required();
    lemma_cmd->add_option("--a", lemma_a, "corner value a, +1 or -1")->required();
    lemma_cmd->add_option("--b", lemma_b, "corner value b, +1 or -1")->required();
    lemma_cmd->add_option("--c", lemma_c, "corner value c, +1 or -1")->required();
    lemma_cmd->add_option("--field", field, "field designator: 'gf <p>' or 'q'");

    auto* ce_cmd = app.add_subcommand("counterexample", "counterexample fixtures and reports");
    ce_cmd->require_subcommand(1);
    auto* r1_cmd = ce_cmd->add_subcommand("remark1", "4x4 family, arbitrary nonzero a and b");
    r1_cmd->add_option("--field", field, "field designator (default q)");
    r1_cmd->add_option("--a", a_text, "value of a (integer, or fraction over q)");
    r1_cmd->add_option("--b", b_text, "value of b (integer, or fraction over q)");
    auto* r2_cmd = ce_cmd->add_subcommand("remark2", "the reorder-before-scaling fixture");
    r2_cmd->add_option("--field", field, "field designator (default q)");

    auto* verify_cmd = app.add_subcommand("verify", "re-check a stored certificate");
    verify_cmd->add_option("file", file, "matrix file")->required();
    verify_cmd->add_option("--cert", cert_file, "certificate file: row line, column line")
        ->required();
    verify_cmd->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rank_cmd->parsed()) return cmd_rank(file, as_json);
        if (schur_cmd->parsed()) return cmd_schur(file, block_list, guttman);
        if (even_cmd->parsed()) return cmd_even_check(file, sample, seed, max_n, as_json);
        if (rec_cmd->parsed()) return cmd_recognize(file, as_json);
        if (scale_cmd->parsed()) return cmd_scale_recognize(file, as_json);
        if (lemma_cmd->parsed()) return cmd_lemma(lemma_n, lemma_a, lemma_b, lemma_c, field);
        if (r1_cmd->parsed()) return cmd_counterexample_remark1(field, a_text, b_text);
        if (r2_cmd->parsed()) return cmd_counterexample_remark2(field);
        if (verify_cmd->parsed()) return cmd_verify(file, cert_file, as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
