#include "sullivan/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "sullivan/orientation.hpp"
#include "sullivan/parse.hpp"
#include "sullivan/verify.hpp"

namespace sullivan::cli {

namespace {

CohomologyClass parse_class(const CohomologyRing& ring, const std::string& text, int default_degree) {
    const Element e = parse_element(ring.dga(), text);
    if (e.is_zero()) return ring.zero_class(default_degree);
    return ring.class_of(e);
}

std::string format_r(const std::optional<Rational>& r) { return r ? r->to_string() : "undefined"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cohomology, orientation pairing and Massey products of exterior DGAs", "sullivan"};
    app.require_subcommand(1);

    std::string model;
    std::string x_expr, y_expr, a_expr, b_expr, c_expr;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;

    const auto add_model = [&](CLI::App* sub) {
        sub->add_option("FILE", model, "model file, or 'heisenberg' for the built-in model")->required();
    };

    auto* validate_cmd = app.add_subcommand("validate", "parse and validate a model");
    add_model(validate_cmd);
    auto* betti_cmd = app.add_subcommand("betti", "print Betti numbers b0 .. bn");
    add_model(betti_cmd);
    auto* pair_cmd = app.add_subcommand("pair", "compute the pairing <x, y> in H^3");
    add_model(pair_cmd);
    pair_cmd->add_option("--x", x_expr, "degree-1 cocycle")->required();
    pair_cmd->add_option("--y", y_expr, "degree-1 cocycle")->required();
    auto* massey_cmd = app.add_subcommand("massey", "compute the Massey triple product <a, b, c>");
    add_model(massey_cmd);
    massey_cmd->add_option("--a", a_expr, "cocycle")->required();
    massey_cmd->add_option("--b", b_expr, "cocycle")->required();
    massey_cmd->add_option("--c", c_expr, "cocycle")->required();
    auto* orient_cmd = app.add_subcommand("orient", "positive generator of H^3 from a basis of H^1");
    add_model(orient_cmd);
    orient_cmd->add_option("--x", x_expr, "degree-1 cocycle")->required();
    orient_cmd->add_option("--y", y_expr, "degree-1 cocycle")->required();
    auto* verify_cmd = app.add_subcommand("verify", "seeded random checks of the orientation identities");
    add_model(verify_cmd);
    verify_cmd->add_option("--trials", trials, "trials per suite")->capture_default_str();
    verify_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    CLI::App* active = app.get_subcommands().front();
    const std::string op = active->get_name();
    try {
        const CohomologyRing ring(load_model(model));
        const Dga& dga = ring.dga();

        if (active == validate_cmd) {
            out << "ok: " << dga.num_generators() << " generators\n";
            for (std::size_t i = 0; i < dga.num_generators(); ++i)
                if (!dga.generator_differential(i).is_zero())
                    out << "d " << dga.name(i) << " = " << dga.format(dga.generator_differential(i)) << '\n';
        } else if (active == betti_cmd) {
            const auto betti = ring.betti_numbers();
            for (std::size_t k = 0; k < betti.size(); ++k) out << (k ? " " : "") << betti[k];
            out << '\n';
        } else if (active == pair_cmd) {
            const auto result = pairing(ring, parse_class(ring, x_expr, 1), parse_class(ring, y_expr, 1));
            out << "r = " << format_r(result.r) << '\n';
            out << "class = " << ring.format(result.h3_class) << '\n';
            out << "coords = " << ring.format_coords(result.h3_class) << '\n';
            out << "primitive = " << dga.format(result.primitive_used) << '\n';
        } else if (active == massey_cmd) {
            const auto triple = massey_triple(ring, parse_class(ring, a_expr, 1), parse_class(ring, b_expr, 1),
                                              parse_class(ring, c_expr, 1));
            out << "representative = " << ring.format(triple.representative) << '\n';
            out << "coords = " << ring.format_coords(triple.representative) << '\n';
            out << "indeterminacy_dim = " << triple.indeterminacy.dim() << '\n';
            out << "defining_system: u = " << dga.format(triple.u) << ", v = " << dga.format(triple.v) << '\n';
        } else if (active == orient_cmd) {
            const auto oriented = positive_generator(ring, parse_class(ring, x_expr, 1), parse_class(ring, y_expr, 1));
            out << "positive_generator = " << ring.format(oriented.generator) << '\n';
            out << "r = " << oriented.r << '\n';
        } else if (active == verify_cmd) {
            const VerifyReport report = run_verify(ring, trials, seed);
            out << report.to_string();
            return report.all_passed() ? kOk : kCounterexample;
        }
        return kOk;
    } catch (const DomainError& e) {
        err << op << ": " << e.what() << '\n';
        return kDomainError;
    } catch (const InputError& e) {
        err << op << ": " << e.what() << '\n';
        return kInputError;
    } catch (const std::logic_error& e) {
        err << op << ": " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace sullivan::cli
