#include "maxsub/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "maxsub/absfield.hpp"
#include "maxsub/classify.hpp"
#include "maxsub/errors.hpp"
#include "maxsub/finring.hpp"
#include "maxsub/funcfield.hpp"
#include "maxsub/isomorphism.hpp"
#include "maxsub/steinitz.hpp"
#include "maxsub/subrings.hpp"

namespace maxsub {

namespace {

using J = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Table, Csv };

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    return out + "\"";
}

std::string cell(const J& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

struct Ctx {
    Format format = Format::Json;
    std::uint32_t max_order = FiniteRing::kEnumCap;
    std::uint64_t limit = 0;
    bool limit_set = false;
    bool serial = false;
    bool classify_all = false;
    std::uint32_t max_degree = 2;
    std::size_t primes = 20;
    std::size_t pairs = 1000;
    std::uint64_t seed = 0x5eed;
    bool mismatch = false;

    std::ostringstream out;

    Exec exec() const { return serial ? Exec::Serial : Exec::Parallel; }
    std::uint64_t limit_or(std::uint64_t dflt) const { return limit_set ? limit : dflt; }

    void emit_object(const J& j) {
        switch (format) {
            case Format::Json:
                out << j.dump() << "\n";
                return;
            case Format::Table:
                for (const auto& [k, v] : j.items()) out << k << ": " << cell(v) << "\n";
                return;
            case Format::Csv: {
                std::string h, r;
                bool first = true;
                for (const auto& [k, v] : j.items()) {
                    if (!first) {
                        h += ",";
                        r += ",";
                    }
                    first = false;
                    h += csv_escape(k);
                    r += csv_escape(cell(v));
                }
                out << h << "\n" << r << "\n";
                return;
            }
        }
    }

    void emit_stream(const std::vector<J>& rows) {
        if (format == Format::Json) {
            for (const J& r : rows) out << r.dump() << "\n";
            return;
        }
        if (rows.empty()) return;
        if (format == Format::Csv) {
            std::string h;
            bool first = true;
            for (const auto& [k, v] : rows.front().items()) {
                if (!first) h += ",";
                first = false;
                h += csv_escape(k);
            }
            out << h << "\n";
            for (const J& r : rows) {
                std::string line;
                first = true;
                for (const auto& [k, v] : r.items()) {
                    if (!first) line += ",";
                    first = false;
                    line += csv_escape(cell(v));
                }
                out << line << "\n";
            }
            return;
        }
        for (const J& r : rows) {
            std::string line;
            bool first = true;
            for (const auto& [k, v] : r.items()) {
                if (!first) line += "\t";
                first = false;
                line += k + "=" + cell(v);
            }
            out << line << "\n";
        }
    }
};

const std::string& req(const std::optional<std::string>& v, const std::string& what) {
    if (!v) throw UsageError("missing argument: " + what);
    return *v;
}

std::uint64_t parse_count(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + " must be a natural number, got '" + s + "'");
    }
}

void check_enum_cap(const Ctx& c, const FiniteRing& r) {
    std::uint32_t cap = std::min(c.max_order, FiniteRing::kEnumCap);
    if (r.order() > cap)
        throw CapExceededError("ring order " + std::to_string(r.order()) +
                               " exceeds the enumeration cap " + std::to_string(cap));
}

// ------------------------------------------------------------------ st

void do_st(Ctx& c, const std::string& op, const std::string& a,
           const std::optional<std::string>& b) {
    static const std::vector<std::string> ops = {"mul",     "div",    "meet",   "join",
                                                 "divides", "stable", "finite", "nat"};
    if (std::find(ops.begin(), ops.end(), op) == ops.end())
        throw UsageError("st: unknown operation '" + op +
                         "'; valid: mul div meet join divides stable finite nat");
    SteinitzNumber x = SteinitzNumber::parse(a);
    J j;
    if (op == "mul") {
        j["result"] = mul(x, SteinitzNumber::parse(req(b, "B"))).render();
    } else if (op == "div") {
        j["result"] = quotient(x, SteinitzNumber::parse(req(b, "B"))).render();
    } else if (op == "meet") {
        j["result"] = meet(x, SteinitzNumber::parse(req(b, "B"))).render();
    } else if (op == "join") {
        j["result"] = join(x, SteinitzNumber::parse(req(b, "B"))).render();
    } else if (op == "divides") {
        j["result"] = divides(x, SteinitzNumber::parse(req(b, "B")));
    } else if (op == "stable") {
        j["result"] = x.stable_part().render();
    } else if (op == "finite") {
        j["result"] = x.finite_part().render();
    } else {  // nat
        auto v = x.as_natural();
        if (v)
            j["result"] = v->str();
        else
            j["result"] = nullptr;
    }
    c.emit_object(j);
}

// ------------------------------------------------------------------ field

void do_field(Ctx& c, const std::string& op, const std::string& f,
              const std::optional<std::string>& arg) {
    static const std::vector<std::string> ops = {"subfield", "degree", "maximal", "count",
                                                 "core",     "chainlen", "chains", "irr",
                                                 "adjoin",   "closed"};
    if (std::find(ops.begin(), ops.end(), op) == ops.end())
        throw UsageError("field: unknown operation '" + op +
                         "'; valid: subfield degree maximal count core chainlen chains irr "
                         "adjoin closed");
    AbsField e = AbsField::parse(f);
    J j;
    if (op == "subfield") {
        j["result"] = is_subfield(e, AbsField::parse(req(arg, "SUP")));
    } else if (op == "degree") {
        auto d = extension_degree(e, AbsField::parse(req(arg, "SUP")));
        j["finite"] = d.has_value();
        if (d)
            j["result"] = d->str();
        else
            j["result"] = nullptr;
    } else if (op == "maximal") {
        std::vector<std::uint64_t> primes;
        J subs = J::array();
        for (const MaximalSubringDescriptor& m : maximal_subrings(e)) {
            primes.push_back(m.prime);
            subs.push_back(J{{"prime", m.prime}, {"subfield", m.subfield.render()}});
        }
        j["primes"] = primes;
        j["subrings"] = subs;
    } else if (op == "count") {
        Cardinal n = count_maximal_subrings_up_to_iso(e);
        j["finite"] = n.is_finite();
        if (n.is_finite())
            j["result"] = n.value();
        else
            j["result"] = "aleph0";
    } else if (op == "core") {
        j["result"] = no_maximal_subring_core(e).render();
    } else if (op == "chainlen") {
        j["length"] = chain_length(e);
        j["count"] = chain_count(e).str();
    } else if (op == "chains") {
        std::vector<J> rows;
        for (const auto& chain : enumerate_chains(e, c.limit_or(1000))) {
            J row;
            J fields = J::array();
            for (const AbsField& step : chain) fields.push_back(step.render());
            row["chain"] = fields;
            rows.push_back(std::move(row));
        }
        c.emit_stream(rows);
        return;
    } else if (op == "irr") {
        j["result"] = irreducible_degree_exists(e, parse_count(req(arg, "M"), "degree"));
    } else if (op == "adjoin") {
        j["result"] = adjoin_degree(e, parse_count(req(arg, "M"), "degree")).render();
    } else {  // closed
        j["result"] = is_algebraically_closed(e);
    }
    c.emit_object(j);
}

// ------------------------------------------------------------------ ring

J class_to_json(const IsoClass& cls) {
    J jc;
    jc["representative"] = cls.representative;
    jc["members"] = cls.members;
    J wits = J::array();
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
        if (cls.witnesses[i].empty()) continue;
        wits.push_back(J{{"member", cls.members[i]}, {"map", cls.witnesses[i]}});
    }
    jc["witnesses"] = wits;
    return jc;
}

void do_ring(Ctx& c, const std::string& op, const std::string& spec,
             const std::optional<std::string>& spec2) {
    static const std::vector<std::string> ops = {"build", "subrings", "maximal", "classify",
                                                 "iso"};
    if (std::find(ops.begin(), ops.end(), op) == ops.end())
        throw UsageError("ring: unknown operation '" + op +
                         "'; valid: build subrings maximal classify iso");
    FiniteRing r = FiniteRing::build(spec);
    if (op == "build") {
        J j;
        j["spec"] = r.spec().render();
        j["order"] = r.order();
        j["characteristic"] = r.characteristic();
        j["is_field"] = r.is_field();
        c.emit_object(j);
        return;
    }
    if (op == "iso") {
        FiniteRing r2 = FiniteRing::build(req(spec2, "SPEC2"));
        check_enum_cap(c, r);
        check_enum_cap(c, r2);
        auto w = find_isomorphism(RingView::of_ring(r), RingView::of_ring(r2));
        J j;
        j["result"] = w.has_value();
        if (w)
            j["witness"] = *w;
        else
            j["witness"] = nullptr;
        c.emit_object(j);
        return;
    }
    check_enum_cap(c, r);
    if (op == "subrings" || op == "maximal") {
        std::vector<ElemSet> sets = op == "subrings" ? enumerate_subrings(r, c.exec())
                                                     : maximal_subring_sets(r, c.exec());
        std::vector<J> rows;
        std::size_t id = 0;
        for (const ElemSet& s : sets) {
            J row;
            row["id"] = id++;
            row["size"] = s.count();
            row["elements"] = s.to_indices();
            rows.push_back(std::move(row));
        }
        c.emit_stream(rows);
        return;
    }
    // classify
    std::vector<ElemSet> sets =
        c.classify_all ? enumerate_subrings(r, c.exec()) : maximal_subring_sets(r, c.exec());
    std::vector<RingView> views;
    views.reserve(sets.size());
    for (const ElemSet& s : sets) views.push_back(RingView::of_subring(r, s));
    std::vector<IsoClass> classes = classify_up_to_iso(views);
    J j;
    j["subrings"] = sets.size();
    j["iso_classes"] = classes.size();
    J jcl = J::array();
    for (const IsoClass& cls : classes) jcl.push_back(class_to_json(cls));
    j["classes"] = jcl;
    c.emit_object(j);
}

// ------------------------------------------------------------------ place

void do_place(Ctx& c, const std::string& op, const std::string& karg,
              const std::optional<std::string>& a1, const std::optional<std::string>& a2) {
    static const std::vector<std::string> ops = {"list", "residue", "discriminate", "orbit",
                                                 "witness"};
    if (std::find(ops.begin(), ops.end(), op) == ops.end())
        throw UsageError("place: unknown operation '" + op +
                         "'; valid: list residue discriminate orbit witness");
    if (op == "witness") {
        WitnessStream stream(AbsField::parse(karg));
        std::vector<J> rows;
        for (const SymbolicPlace& pl : stream.take(c.limit_or(10))) {
            J row;
            row["degree"] = pl.degree_steinitz().render();
            row["prime"] = pl.prime;
            row["power"] = pl.power;
            row["residue"] = residue_field(pl).render();
            rows.push_back(std::move(row));
        }
        c.emit_stream(rows);
        return;
    }
    FiniteRing k = FiniteRing::build(karg);
    if (op == "list") {
        std::uint32_t d =
            static_cast<std::uint32_t>(parse_count(req(a1, "DEGREE"), "degree"));
        std::vector<J> rows;
        for (const Place& pl : places_of_degree(k, d)) {
            J row;
            row["place"] = place_render(pl);
            row["residue_degree"] = pl.residue_degree();
            row["residue"] = residue_field(k, pl).render();
            rows.push_back(std::move(row));
        }
        c.emit_stream(rows);
        return;
    }
    if (op == "residue") {
        Place pl = place_parse(k, req(a1, "PLACE"));
        c.emit_object(J{{"result", residue_field(k, pl).render()}});
        return;
    }
    if (op == "discriminate") {
        Place pa = place_parse(k, req(a1, "PLACE_A"));
        Place pb = place_parse(k, req(a2, "PLACE_B"));
        Discrimination d = discriminate_places(k, pa, pb);
        J j;
        j["result"] = d == Discrimination::NotIsomorphic ? "NotIsomorphic" : "Inconclusive";
        j["residue_a"] = residue_field(k, pa).render();
        j["residue_b"] = residue_field(k, pb).render();
        c.emit_object(j);
        return;
    }
    // orbit
    Place pl = place_parse(k, req(a1, "PLACE"));
    std::vector<J> rows;
    for (const Place& img : mobius_orbit(k, pl)) {
        J row;
        row["place"] = place_render(img);
        row["residue_degree"] = img.residue_degree();
        rows.push_back(std::move(row));
    }
    c.emit_stream(rows);
}

// ------------------------------------------------------------------ verify

J report_to_json(const VerifyReport& rep) {
    J j;
    j["check"] = rep.check;
    j["matched"] = rep.matched;
    j["iso_classes"] = rep.iso_classes;
    j["expected_iso_classes"] = rep.expected_iso_classes;
    J pred = J::array();
    for (const Prediction& p : rep.predicted) {
        J jp;
        jp["label"] = p.label;
        if (!p.members.none()) jp["elements"] = p.members.to_indices();
        pred.push_back(std::move(jp));
    }
    j["predicted"] = pred;
    J found = J::array();
    for (const auto& f : rep.found) found.push_back(f);
    j["found"] = found;
    J jcl = J::array();
    J wits = J::array();
    for (const IsoClass& cls : rep.classes) {
        jcl.push_back(J{{"representative", cls.representative}, {"members", cls.members}});
        for (std::size_t i = 0; i < cls.members.size(); ++i) {
            if (cls.witnesses[i].empty()) continue;
            wits.push_back(J{{"member", cls.members[i]},
                             {"representative", cls.representative},
                             {"map", cls.witnesses[i]}});
        }
    }
    j["classes"] = jcl;
    j["witnesses"] = wits;
    j["notes"] = rep.notes;
    return j;
}

void do_verify(Ctx& c, const std::string& op, const std::optional<std::string>& a1,
               const std::optional<std::string>& a2) {
    static const std::vector<std::string> ops = {"kxk", "dual", "product", "places",
                                                 "rationals"};
    if (std::find(ops.begin(), ops.end(), op) == ops.end())
        throw UsageError("verify: unknown operation '" + op +
                         "'; valid: kxk dual product places rationals");
    VerifyReport rep;
    if (op == "kxk") {
        rep = verify_kxk(FiniteRing::build(req(a1, "SPEC")), c.exec());
    } else if (op == "dual") {
        rep = verify_dual_numbers(FiniteRing::build(req(a1, "SPEC")), c.exec());
    } else if (op == "product") {
        std::uint32_t p = static_cast<std::uint32_t>(parse_count(req(a1, "P"), "prime"));
        std::uint32_t n = static_cast<std::uint32_t>(parse_count(req(a2, "COPIES"), "copies"));
        rep = verify_product_field(p, n, c.exec());
    } else if (op == "places") {
        rep = verify_places(FiniteRing::build(req(a1, "SPEC")), c.max_degree);
    } else {  // rationals
        rep = verify_rationals(c.primes, c.pairs, c.seed);
    }
    c.emit_object(report_to_json(rep));
    if (!rep.matched) c.mismatch = true;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult res;
    Ctx ctx;

    CLI::App app{"Maximal subrings of absolutely algebraic fields: Steinitz arithmetic, "
                 "finite-ring brute force, and theorem checks",
                 "maxsub"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string fmt = "json";
    app.add_option("--format", fmt, "Output format")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    auto* limit_opt =
        app.add_option("--limit", ctx.limit, "Cap on enumerated items (chains, witnesses)");
    app.add_option("--max-order", ctx.max_order, "Enumeration order cap (<= 256)");
    app.add_flag("--serial", ctx.serial, "Use the serial reference enumeration");
    app.add_flag("--all", ctx.classify_all, "Classify all subrings, not just maximal ones");
    app.add_option("--max-degree", ctx.max_degree, "Largest place degree checked by verify places");
    app.add_option("--primes", ctx.primes, "Number of primes for verify rationals");
    app.add_option("--pairs", ctx.pairs, "Random pairs per prime for verify rationals");
    app.add_option("--seed", ctx.seed, "Random seed for verify rationals");

    std::string op, a, b, karg, extra;

    auto* st = app.add_subcommand("st", "Steinitz number arithmetic");
    auto* field = app.add_subcommand("field", "Absolutely algebraic fields GF(q^N)");
    auto* ring = app.add_subcommand("ring", "Finite rings and brute-force subrings");
    auto* place = app.add_subcommand("place", "Places of the rational function field K(x)");
    auto* verify = app.add_subcommand("verify", "Theorem checks against brute force");

    for (CLI::App* sub : {st, field, ring, place, verify}) {
        sub->add_option("op", op, "Operation")->required();
    }
    st->add_option("a", a, "Steinitz expression")->required();
    st->add_option("b", b, "Second Steinitz expression");
    field->add_option("a", a, "Field literal GF(q^...) or F_{q^n}")->required();
    field->add_option("b", b, "Second field literal or numeric argument");
    ring->add_option("a", a, "Ring spec")->required();
    ring->add_option("b", b, "Second ring spec");
    place->add_option("a", karg, "Coefficient field ring spec (or field literal for witness)")
        ->required();
    place->add_option("b", b, "Place literal or degree");
    place->add_option("c", extra, "Second place literal");
    verify->add_option("a", a, "Check argument");
    verify->add_option("b", b, "Second check argument");

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
        ctx.format = fmt == "json" ? Format::Json : fmt == "table" ? Format::Table : Format::Csv;
        ctx.limit_set = limit_opt->count() > 0;

        auto opt = [](const CLI::App* sub, const std::string& name,
                      const std::string& val) -> std::optional<std::string> {
            if (sub->count(name) > 0) return val;
            return std::nullopt;
        };

        if (st->parsed()) {
            do_st(ctx, op, a, opt(st, "b", b));
        } else if (field->parsed()) {
            do_field(ctx, op, a, opt(field, "b", b));
        } else if (ring->parsed()) {
            do_ring(ctx, op, a, opt(ring, "b", b));
        } else if (place->parsed()) {
            do_place(ctx, op, karg, opt(place, "b", b), opt(place, "c", extra));
        } else if (verify->parsed()) {
            do_verify(ctx, op, opt(verify, "a", a), opt(verify, "b", b));
        }
        res.exit_code = ctx.mismatch ? 3 : 0;
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        res.exit_code = 0;
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 2;
        return res;
    } catch (const UsageError& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 2;
        return res;
    } catch (const MismatchError& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 3;
        return res;
    } catch (const Error& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 1;
        return res;
    } catch (const std::exception& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 1;
        return res;
    }
    res.out = ctx.out.str();
    return res;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    CliResult res = run_cli(args);
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}

}  // namespace maxsub
