#include "kweyl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "kweyl/kmodule.hpp"
#include "kweyl/laurent_io.hpp"
#include "kweyl/selftest.hpp"

namespace kweyl {

namespace {

using nlohmann::json;

struct Config {
    std::string type = "A1";
    std::string lattice = "sc";
    std::string scalar = "int";
    std::string output = "plain";
    std::uint64_t seed = 0;
    int samples = 20;

    DatumPtr datum() const {
        if (lattice == "sc") return build_root_datum(type, LatticeChoice::simply_connected);
        if (lattice == "adjoint") return build_root_datum(type, LatticeChoice::adjoint);
        // explicit basis: rows separated by ';', entries by ','
        std::vector<std::vector<int>> rows;
        std::stringstream ss(lattice);
        std::string row;
        while (std::getline(ss, row, ';')) {
            rows.emplace_back();
            std::stringstream rs(row);
            std::string cell;
            while (std::getline(rs, cell, ','))
                try {
                    rows.back().push_back(std::stoi(cell));
                } catch (const std::exception&) {
                    throw ParseError("invalid lattice matrix entry '" + cell + "'");
                }
        }
        if (rows.empty()) throw ParseError("empty lattice matrix");
        IMatrix basis(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw ParseError("lattice matrix must be square");
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                basis(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        }
        return build_root_datum(type, LatticeChoice::explicit_basis, 0, &basis);
    }

    ScalarRing ring() const {
        if (scalar == "int") return ScalarRing::integers;
        if (scalar == "rat") return ScalarRing::rationals;
        throw ParseError("scalar ring must be 'int' or 'rat'");
    }

    bool json_output() const { return output == "json"; }
};

IVector parse_weight(const DatumPtr& d, const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ','))
        try {
            entries.push_back(std::stoi(cell));
        } catch (const std::exception&) {
            throw ParseError("invalid weight entry '" + cell + "'");
        }
    if (static_cast<int>(entries.size()) != d->rank())
        throw ParseError("weight needs " + std::to_string(d->rank()) + " fundamental-weight coordinates");
    IVector v(d->rank());
    for (int i = 0; i < d->rank(); ++i) v[i] = entries[i];
    return v;
}

/// Word over simple reflections: either digits ("121") or a comma list
/// ("1,2,1"); letters are 1-based on the command line.
std::vector<int> parse_word(const DatumPtr& d, const std::string& text) {
    std::vector<int> word;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string cell;
        while (std::getline(ss, cell, ','))
            try {
                word.push_back(std::stoi(cell) - 1);
            } catch (const std::exception&) {
                throw ParseError("invalid word letter '" + cell + "'");
            }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw ParseError("word letters must be digits 1..9 or a comma list");
            word.push_back(c - '1');
        }
    }
    for (int s : word)
        if (s < 0 || s >= d->semisimple_rank())
            throw ParseError("word letter out of range 1.." + std::to_string(d->semisimple_rank()));
    return word;
}

/// Recursive-descent parser for operator expressions over the grammar
///   expr    := term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := ['-'] primary
///   primary := '(' expr ')' | s[i] | d[i] | dp[i] | integer | x^k | e[..]
template <class S>
class OperatorParser {
public:
    OperatorParser(DatumPtr datum, const std::string& text) : datum_(std::move(datum)), text_(text) {}

    TwistedOperator<S> parse() {
        auto op = expr();
        skip();
        if (pos_ < text_.size()) throw ParseError("trailing input in operator expression: '" + rest() + "'");
        return op;
    }

private:
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw ParseError(std::string("expected '") + c + "' in operator expression at '" + rest() + "'");
    }
    std::string rest() { return text_.substr(std::min(pos_, text_.size())); }

    long integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer in operator expression at '" + rest() + "'");
        return std::stol(text_.substr(start, pos_ - start));
    }

    int simple_index() {
        expect('[');
        long i = integer();
        expect(']');
        if (i < 1 || i > datum_->semisimple_rank())
            throw ParseError("simple root index out of range 1.." + std::to_string(datum_->semisimple_rank()));
        return static_cast<int>(i - 1);
    }

    TwistedOperator<S> expr() {
        auto acc = term();
        for (;;) {
            if (consume('+'))
                acc = acc + term();
            else if (consume('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    TwistedOperator<S> term() {
        auto acc = factor();
        while (consume('*')) acc = acc * factor();
        return acc;
    }

    TwistedOperator<S> factor() {
        if (consume('-')) return TwistedOperator<S>(datum_) - primary();
        return primary();
    }

    TwistedOperator<S> primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto op = expr();
            expect(')');
            return op;
        }
        if (c == 's' || c == 'd') {
            ++pos_;
            bool prime = false;
            if (c == 'd' && peek() == 'p') {
                ++pos_;
                prime = true;
            }
            int i = simple_index();
            if (c == 's') return op_weyl<S>(datum_, datum_->simple_reflection(i));
            return op_delta<S>(datum_, prime ? OperatorKind::delta_prime : OperatorKind::delta,
                               datum_->simple_roots()[i]);
        }
        if (c == 'x') {
            if (datum_->rank() != 1) throw ParseError("'x^k' requires rank 1");
            ++pos_;
            long k = consume('^') ? integer() : 1;
            IVector e(1);
            e << static_cast<int>(k);
            return op_scalar(LaurentPoly<S>::monomial(datum_, e));
        }
        if (c == 'e') {
            ++pos_;
            expect('[');
            IVector e(datum_->rank());
            for (int i = 0; i < datum_->rank(); ++i) {
                if (i) expect(',');
                e[i] = static_cast<int>(integer());
            }
            expect(']');
            return op_scalar(LaurentPoly<S>::monomial(datum_, e));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return op_scalar(LaurentPoly<S>::constant(datum_, S(integer())));
        throw ParseError("unexpected input in operator expression at '" + rest() + "'");
    }

    DatumPtr datum_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

json weight_json(const IVector& v) { return json(std::vector<int>(v.data(), v.data() + v.size())); }

json word_json(const std::vector<int>& word) {
    std::vector<int> shifted;
    shifted.reserve(word.size());
    for (int s : word) shifted.push_back(s + 1);
    return json(shifted);
}

void emit(const Config& cfg, std::ostream& out, const json& j, const std::string& plain) {
    if (cfg.json_output())
        out << j.dump(2) << "\n";
    else
        out << plain << "\n";
}

int emit_checks(const Config& cfg, std::ostream& out, const std::string& command,
                const std::vector<CheckResult>& checks) {
    bool all = true;
    for (const auto& c : checks) all = all && c.pass;
    if (cfg.json_output()) {
        json j;
        j["command"] = command;
        j["type"] = cfg.type;
        j["pass"] = all;
        j["checks"] = json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        out << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.detail.empty()) out << "  (" << c.detail << ")";
            out << "\n";
        }
        out << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all ? 0 : 1;
}

template <class S>
int cmd_char(const Config& cfg, std::ostream& out, const std::string& weight, bool demazure,
             const std::string& word_text) {
    DatumPtr d = cfg.datum();
    IVector lambda = parse_weight(d, weight);
    LaurentPoly<S> result(d);
    json j;
    if (demazure) {
        std::vector<int> word = parse_word(d, word_text);
        int w = d->element_from_word(word);
        result = demazure_character<S>(d, w, lambda);
        j["command"] = "demazure-char";
        j["w"] = word_json(word);
        j["weyl_id"] = w;
    } else {
        result = weyl_character<S>(d, lambda);
        j["command"] = "char";
        j["dimension"] = scalar_to_string(evaluate_at_identity(result));
    }
    j["type"] = cfg.type;
    j["weight"] = weight_json(lambda);
    j["character"] = laurent_to_json(result);
    emit(cfg, out, j, render_laurent(result));
    return 0;
}

template <class S>
int cmd_braid(const Config& cfg, std::ostream& out, const std::string& word_text) {
    DatumPtr d = cfg.datum();
    int w = word_text.empty() ? d->longest_element() : d->element_from_word(parse_word(d, word_text));
    Sampler rng(cfg.seed);
    std::vector<LaurentPoly<S>> samples;
    for (int i = 0; i < cfg.samples; ++i) samples.push_back(rng.template laurent<S>(d));
    bool pass = braid_check<S>(d, w, samples);
    auto words = all_reduced_words(*d, w);
    std::ostringstream plain;
    plain << (pass ? "PASS" : "FAIL") << "  braid independence for w of length " << d->weyl_length(w) << " ("
          << words.size() << " reduced words, " << samples.size() << " samples)";
    json j{{"command", "braid-check"}, {"type", cfg.type},       {"weyl_id", w},
           {"length", d->weyl_length(w)}, {"reduced_words", words.size()}, {"samples", samples.size()},
           {"pass", pass}};
    emit(cfg, out, j, plain.str());
    return pass ? 0 : 1;
}

template <class S>
int cmd_hecke(const Config& cfg, std::ostream& out) {
    DatumPtr d = cfg.datum();
    Sampler rng(cfg.seed);
    std::vector<LaurentPoly<S>> samples;
    for (int i = 0; i < std::min(cfg.samples, 10); ++i) samples.push_back(rng.template laurent<S>(d, 4, 3, 5));
    auto report = hecke_relations_check<S>(d, samples);
    json j{{"command", "hecke"},
           {"type", cfg.type},
           {"checked", report.checks},
           {"failures", report.failures},
           {"pass", report.pass()}};
    std::ostringstream plain;
    plain << (report.pass() ? "PASS" : "FAIL") << "  Hecke multiplication law (" << report.checks
          << " identities)";
    for (const auto& f : report.failures) plain << "\n  " << f;
    emit(cfg, out, j, plain.str());
    return report.pass() ? 0 : 1;
}

template <class S>
int cmd_normal_form(const Config& cfg, std::ostream& out, const std::string& expr) {
    DatumPtr d = cfg.datum();
    auto op = OperatorParser<S>(d, expr).parse();
    auto nf = normal_form(op);
    json terms = json::array();
    std::ostringstream plain;
    for (const auto& [w, c] : nf.coeffs) {
        terms.push_back({{"w", word_json(d->weyl_word(w))}, {"coeff", laurent_to_json(c)}});
        plain << "w=[";
        const auto& word = d->weyl_word(w);
        for (std::size_t i = 0; i < word.size(); ++i) plain << (i ? "," : "") << word[i] + 1;
        plain << "]  coeff = " << render_laurent(c) << "\n";
    }
    bool augmentation = in_augmentation_ideal(op);
    json j{{"command", "normal-form"},
           {"type", cfg.type},
           {"terms", terms},
           {"in_augmentation_ideal", augmentation}};
    plain << "in augmentation ideal: " << (augmentation ? "yes" : "no");
    emit(cfg, out, j, plain.str());
    return 0;
}

template <class S>
int cmd_basis(const Config& cfg, std::ostream& out, const std::string& weights_text) {
    DatumPtr d = cfg.datum();
    std::vector<IVector> override_weights;
    const std::vector<IVector>* override_ptr = nullptr;
    if (!weights_text.empty()) {
        std::stringstream ss(weights_text);
        std::string cell;
        while (std::getline(ss, cell, ';')) override_weights.push_back(parse_weight(d, cell));
        override_ptr = &override_weights;
    }
    auto basis = steinberg_basis<S>(d, override_ptr);
    json j{{"command", "basis"}, {"type", cfg.type}};
    j["weights"] = json::array();
    for (const auto& l : basis.weights()) j["weights"].push_back(weight_json(l));
    j["gram"] = json::array();
    for (const auto& row : basis.gram()) {
        json jr = json::array();
        for (const auto& entry : row) jr.push_back(laurent_to_json(entry));
        j["gram"].push_back(std::move(jr));
    }
    j["det"] = laurent_to_json(basis.gram_det());
    j["dual"] = json::array();
    for (const auto& u : basis.dual()) j["dual"].push_back(laurent_to_json(u));

    std::ostringstream plain;
    plain << "Steinberg basis for " << cfg.type << " (" << basis.size() << " elements)\n";
    for (int w = 0; w < basis.size(); ++w) {
        plain << "  w=" << w << "  lambda=[";
        for (int i = 0; i < d->rank(); ++i) plain << (i ? "," : "") << basis.weights()[w][i];
        plain << "]  dual = " << render_laurent(basis.dual()[w]) << "\n";
    }
    plain << "gram determinant = " << render_laurent(basis.gram_det());
    emit(cfg, out, j, plain.str());
    return 0;
}

template <class S>
int cmd_invariants(const Config& cfg, std::ostream& out, int free_rank) {
    DatumPtr d = cfg.datum();
    InducedModule<S> m(steinberg_basis<S>(d), free_rank, 0);
    Sampler rng(cfg.seed);
    std::vector<CheckResult> checks;
    bool theorem_d = true, weyl_abelian = true, projection = true;
    for (int i = 0; i < cfg.samples; ++i) {
        auto a = m.zero();
        for (int w = 0; w < m.basis().size(); ++w) {
            std::vector<LaurentPoly<S>> comps;
            for (int k = 0; k < free_rank; ++k)
                comps.push_back(rng.uniform(0, 1) ? rng.template invariant<S>(d) : LaurentPoly<S>::zero(d));
            a.coords[w] = m.make_b(std::move(comps));
        }
        bool in_image = true;
        for (int w = 1; w < m.basis().size(); ++w)
            if (!a.coords[w].is_zero()) in_image = false;
        theorem_d = theorem_d && (m.is_hecke_invariant(a) == in_image);
        weyl_abelian = weyl_abelian && (m.is_weyl_invariant(a) == m.is_hecke_invariant(a));
        projection = projection && m.project_weyl_formula(a).second;
    }
    detail::record(checks, "hecke-invariants-equal-pullback-image", theorem_d,
                   std::to_string(cfg.samples) + " samples, free rank " + std::to_string(free_rank));
    detail::record(checks, "weyl-equals-hecke-for-free-coefficients", weyl_abelian);
    detail::record(checks, "weyl-formula-projection", projection);
    return emit_checks(cfg, out, "invariants", checks);
}

int cmd_mcleod(const Config& cfg, std::ostream& out) {
    auto report = mcleod_report(cfg.seed);
    std::vector<CheckResult> checks;
    detail::record(checks, "witness-weyl-invariant", report.witness_weyl_invariant,
                   "torsion generator in the x-coordinate");
    detail::record(checks, "witness-not-hecke-invariant", !report.witness_hecke_invariant);
    detail::record(checks, "hecke-invariants-match-pullback-image",
                   report.hecke_invariants_match_pullback_image,
                   std::to_string(report.grid_points) + " grid points");
    detail::record(checks, "torsion-free-weyl-equals-hecke", report.torsion_free_weyl_equals_hecke,
                   std::to_string(report.samples) + " samples");
    return emit_checks(cfg, out, "mcleod", checks);
}

template <class S>
int cmd_flag(const Config& cfg, std::ostream& out, int k, int l, const std::string& first,
             const std::string& second, bool have_kl) {
    DatumPtr d = cfg.datum();
    auto m = InducedModule<S>::flag_model(d);
    LaurentPoly<S> u(d), v(d);
    if (have_kl) {
        if (d->rank() != 1) throw ParseError("--k/--l shorthand requires a rank-1 type; use --first/--second");
        IVector ek(1), el(1);
        ek << k;
        el << l;
        u = LaurentPoly<S>::monomial(d, ek);
        v = LaurentPoly<S>::monomial(d, el);
    } else {
        u = parse_laurent<S>(d, first);
        v = parse_laurent<S>(d, second);
    }
    auto projected = m.flag_project(m.embed(u, m.make_b({v})));
    json j{{"command", "flag"},
           {"type", cfg.type},
           {"first", laurent_to_json(u)},
           {"second", laurent_to_json(v)},
           {"projection", laurent_to_json(projected)}};
    emit(cfg, out, j, render_laurent(projected));
    return 0;
}

int cmd_selftest(const Config& cfg, std::ostream& out) {
    SelftestConfig scfg;
    scfg.datum = cfg.datum();
    scfg.scalar = cfg.ring();
    scfg.seed = cfg.seed;
    scfg.samples = std::min(cfg.samples, 20);
    auto checks = run_selftest(scfg);
    return emit_checks(cfg, out, "selftest", checks);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"exact divided-difference calculator on torus character rings"};
    app.require_subcommand(1);
    app.add_option("--type", cfg.type, "Cartan type expression, e.g. A1, B2, A1xA1, A2xT1");
    app.add_option("--lattice", cfg.lattice,
                   "character lattice: sc, adjoint, or an explicit basis matrix 'a,b;c,d'");
    app.add_option("--scalar", cfg.scalar, "coefficient ring: int or rat")
        ->check(CLI::IsMember({"int", "rat"}));
    app.add_option("--output", cfg.output, "output format: plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    app.add_option("--seed", cfg.seed, "seed for randomized property runs");
    app.add_option("--samples", cfg.samples, "sample count for randomized property runs");

    std::string weight, word_text, op_expr, weights_text, first, second;
    int free_rank = 1, flag_k = 0, flag_l = 0;

    auto* c_char = app.add_subcommand("char", "Weyl character of a dominant weight");
    c_char->fallthrough();
    c_char->add_option("--weight", weight, "fundamental-weight coordinates, e.g. 1,0")->required();

    auto* c_dem = app.add_subcommand("demazure-char", "Demazure character partial_w(e^lambda)");
    c_dem->fallthrough();
    c_dem->add_option("--w", word_text, "word in simple reflections, e.g. 121 or 1,2,1")->required();
    c_dem->add_option("--weight", weight, "fundamental-weight coordinates")->required();

    auto* c_braid = app.add_subcommand("braid-check", "verify word independence of partial_w");
    c_braid->fallthrough();
    c_braid->add_option("--w", word_text, "word in simple reflections (default: longest element)");

    auto* c_hecke = app.add_subcommand("hecke", "verify the Hecke ring multiplication law");
    c_hecke->fallthrough();

    auto* c_nf = app.add_subcommand("normal-form", "expand an operator in the basis (partial'_w)");
    c_nf->fallthrough();
    c_nf->add_option("--op", op_expr, "operator expression over s[i], d[i], dp[i], ring literals")
        ->required();

    auto* c_basis = app.add_subcommand("basis", "Steinberg basis, Gram matrix, determinant, dual basis");
    c_basis->fallthrough();
    c_basis->add_option("--weights", weights_text, "override weights, one per Weyl id: '0;1' etc.");

    auto* c_inv = app.add_subcommand("invariants", "Hecke vs Weyl invariants of an induced module");
    c_inv->fallthrough();
    c_inv->add_option("--free-rank", free_rank, "rank of the free coefficient module")
        ->check(CLI::PositiveNumber);

    auto* c_mcleod = app.add_subcommand("mcleod", "the SU(2) torsion counterexample report");
    c_mcleod->fallthrough();

    auto* c_flag = app.add_subcommand("flag", "projection in the flag model R(T) (x) R(T)");
    c_flag->fallthrough();
    auto* opt_k = c_flag->add_option("--k", flag_k, "first-factor exponent x^k (rank 1)");
    auto* opt_l = c_flag->add_option("--l", flag_l, "second-factor exponent y^l (rank 1)");
    c_flag->add_option("--first", first, "first-factor element literal");
    c_flag->add_option("--second", second, "second-factor element literal");

    auto* c_self = app.add_subcommand("selftest", "run the property suite for the configured type");
    c_self->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        const bool rational = cfg.ring() == ScalarRing::rationals;
        if (c_char->parsed())
            return rational ? cmd_char<Rat>(cfg, out, weight, false, "")
                            : cmd_char<Int>(cfg, out, weight, false, "");
        if (c_dem->parsed())
            return rational ? cmd_char<Rat>(cfg, out, weight, true, word_text)
                            : cmd_char<Int>(cfg, out, weight, true, word_text);
        if (c_braid->parsed())
            return rational ? cmd_braid<Rat>(cfg, out, word_text) : cmd_braid<Int>(cfg, out, word_text);
        if (c_hecke->parsed()) return rational ? cmd_hecke<Rat>(cfg, out) : cmd_hecke<Int>(cfg, out);
        if (c_nf->parsed())
            return rational ? cmd_normal_form<Rat>(cfg, out, op_expr) : cmd_normal_form<Int>(cfg, out, op_expr);
        if (c_basis->parsed())
            return rational ? cmd_basis<Rat>(cfg, out, weights_text) : cmd_basis<Int>(cfg, out, weights_text);
        if (c_inv->parsed())
            return rational ? cmd_invariants<Rat>(cfg, out, free_rank)
                            : cmd_invariants<Int>(cfg, out, free_rank);
        if (c_mcleod->parsed()) return cmd_mcleod(cfg, out);
        if (c_flag->parsed()) {
            bool have_kl = opt_k->count() > 0 || opt_l->count() > 0;
            if (!have_kl && (first.empty() || second.empty()))
                throw ParseError("flag requires --k/--l or --first/--second");
            return rational ? cmd_flag<Rat>(cfg, out, flag_k, flag_l, first, second, have_kl)
                            : cmd_flag<Int>(cfg, out, flag_k, flag_l, first, second, have_kl);
        }
        if (c_self->parsed()) return cmd_selftest(cfg, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DatumError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace kweyl
