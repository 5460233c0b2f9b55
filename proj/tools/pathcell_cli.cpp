#include "pathcell/bar.hpp"
#include "pathcell/cycles.hpp"
#include "pathcell/massey.hpp"
#include "pathcell/minimal.hpp"
#include "pathcell/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace pathcell;

namespace {

EmitFormat parse_format(const std::string& s) {
    if (s == "json")
        return EmitFormat::json;
    if (s == "latex")
        return EmitFormat::latex;
    if (s == "text")
        return EmitFormat::text;
    throw CLI::ValidationError("--emit must be json, latex or text");
}

void write_out(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::string full = path;
    if (const char* dir = std::getenv("PATHCELL_OUT")) {
        if (path.find('/') == std::string::npos)
            full = std::string(dir) + "/" + path;
    }
    std::ofstream os(full, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open output file " + full);
    os << content;
}

MasseyWord parse_massey_word(const std::string& s) {
    MasseyWord w;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty())
            throw CLI::ValidationError("empty letter in --word");
        Flavor f = Flavor::plain;
        std::string t = tok;
        if (t.rfind("1-", 0) == 0) {
            f = Flavor::complement;
            t = t.substr(2);
        }
        SymBase b;
        if (t == "a")
            b = SymBase::a();
        else if (t == "b")
            b = SymBase::b();
        else
            throw CLI::ValidationError("letter base must be a or b: " + tok);
        w.push_back({b, f});
        tok.clear();
    };
    for (char c : s) {
        if (c == ',')
            flush();
        else if (!isspace((unsigned char)c))
            tok += c;
    }
    flush();
    return w;
}

Element parse_letter(const std::string& s) {
    // product of catalog tokens joined by '*': a, 1-a, b, 1-b, T{a,1-a,...}
    Element out = Element::unit();
    std::string tok;
    auto flush = [&]() {
        if (tok.empty())
            return;
        Element g;
        if (tok.rfind("T{", 0) == 0 && tok.back() == '}') {
            std::string inner = tok.substr(2, tok.size() - 3);
            SymBase base = SymBase::a();
            bool base_set = false;
            FlavorWord w;
            std::string part;
            auto flush_part = [&]() {
                Flavor f = Flavor::plain;
                std::string t = part;
                if (t.rfind("1-", 0) == 0) {
                    f = Flavor::complement;
                    t = t.substr(2);
                }
                SymBase b = t == "b" ? SymBase::b() : SymBase::a();
                if (t != "a" && t != "b")
                    throw CLI::ValidationError("Totaro letters must be at a or b");
                if (base_set && !(b == base))
                    throw CLI::ValidationError("Totaro word must have a single base");
                base = b;
                base_set = true;
                w.push_back(f);
                part.clear();
            };
            for (char c : inner) {
                if (c == ',')
                    flush_part();
                else
                    part += c;
            }
            flush_part();
            g = Element::totaro(base, w);
        } else if (tok == "a")
            g = Element::steinberg(SymBase::a(), Flavor::plain);
        else if (tok == "1-a")
            g = Element::steinberg(SymBase::a(), Flavor::complement);
        else if (tok == "b")
            g = Element::steinberg(SymBase::b(), Flavor::plain);
        else if (tok == "1-b")
            g = Element::steinberg(SymBase::b(), Flavor::complement);
        else
            throw CLI::ValidationError("unknown token: " + tok);
        out = multiply(out, g);
        tok.clear();
    };
    for (char c : s) {
        if (c == '*')
            flush();
        else if (!isspace((unsigned char)c))
            tok += c;
    }
    flush();
    return out;
}

BarWord parse_bar_word(const std::string& s) {
    BarWord w;
    std::string tok;
    for (char c : s) {
        if (c == '|') {
            w.push_back(parse_letter(tok));
            tok.clear();
        } else {
            tok += c;
        }
    }
    if (!tok.empty())
        w.push_back(parse_letter(tok));
    return w;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pathcell: cellular and minimal models of the path-torsor complex of "
                 "P^1-{0,1,inf}, with exact verification"};
    app.require_subcommand(1);

    int n = 2;
    std::string emit = "text";
    std::string out_path;
    std::string word;
    bool check = false;
    int trunc_len = 3, trunc_weight = 2;

    auto* complex = app.add_subcommand("complex", "build and verify the C/B/H matrices");
    auto* complex_build = complex->add_subcommand("build", "assemble the column complexes");
    complex_build->add_option("-n", n, "number of coordinates")->required()->check(CLI::Range(1, 8));
    complex_build->add_option("--emit", emit, "json|latex|text");
    complex_build->add_option("--out", out_path, "output path");

    auto* minimal = app.add_subcommand("minimal", "emit the minimal module differential");
    minimal->add_option("-n", n, "number of coordinates")->required()->check(CLI::Range(0, 10));
    minimal->add_option("--emit", emit, "json|latex|text");
    minimal->add_option("--out", out_path, "output path");

    auto* massey = app.add_subcommand("massey", "Massey product representatives");
    auto* massey_repr = massey->add_subcommand("repr", "canonical representative cocycle");
    massey_repr->add_option("--word", word, "comma list of letters, e.g. a,1-a,a")->required();

    auto* cycles = app.add_subcommand("cycles", "parametrized cycle checks");
    auto* cycles_rho = cycles->add_subcommand("rho", "Bloch-Totaro family");
    cycles_rho->add_option("-n", n, "index of the family member")->required()->check(CLI::Range(1, 8));
    cycles_rho->add_flag("--check", check, "verify d rho_n = rho_{n-1} . a");
    auto* cycles_ff = cycles->add_subcommand("fourfold", "the 4-fold representative");
    cycles_ff->add_flag("--check", check, "verify its cycle differential vanishes");

    auto* bar = app.add_subcommand("bar", "reduced bar complex");
    auto* bar_d = bar->add_subcommand("d", "differential of a bar word");
    bar_d->add_option("--word", word, "letters joined by |, e.g. \"a|1-a\"")->required();
    auto* bar_h0 = bar->add_subcommand("h0", "degree-0 kernel in a truncation window");
    bar_h0->add_option("--max-len", trunc_len, "maximum word length");
    bar_h0->add_option("--weight", trunc_weight, "Adams weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error
    }

    try {
        if (complex_build->parsed()) {
            PathComplex pc(n);
            Totalization tot = pc.totalize_C();
            VerificationReport rep = pc.verify();
            EmitFormat f = parse_format(emit);
            std::string content;
            if (f == EmitFormat::json)
                content = complex_json(pc, tot, rep);
            else if (f == EmitFormat::latex)
                content = complex_latex(pc);
            else
                content = matrix_text(tot.total) + "\n" + report_json(rep);
            write_out(content, out_path);
            std::cerr << (rep.ok() ? "verification passed" : "VERIFICATION FAILED") << ": D_C^2, "
                      << "D_B^2 and HC=BH on " << rep.hc_bh_cells_checked << " columns\n";
            if (!rep.ok()) {
                for (const auto& m : rep.failures)
                    std::cerr << "  " << m << "\n";
                return 1;
            }
            return 0;
        }
        if (minimal->parsed()) {
            MinimalModule mm = minimize(n);
            auto dd = mm.module.d_squared_residuals();
            bool minimal_ok = check_minimal(mm) && dd.empty();
            write_out(emit_matrix(mm.module, parse_format(emit)), out_path);
            std::cerr << "rank " << mm.module.rank() << ", d^2 residuals " << dd.size()
                      << ", decomposable differential " << (check_minimal(mm) ? "yes" : "NO")
                      << "\n";
            return minimal_ok ? 0 : 1;
        }
        if (massey_repr->parsed()) {
            MasseyWord w = parse_massey_word(word);
            Element rep = massey_representative(w);
            std::cout << rep.str() << "\n";
            bool closed = differential(rep).is_zero();
            std::cerr << (closed ? "cocycle verified" : "NOT a cocycle") << "\n";
            return closed ? 0 : 1;
        }
        if (cycles_rho->parsed()) {
            ParamCycle z = rho(n);
            std::cout << z.str() << "\n";
            if (check) {
                if (n < 2) {
                    std::cerr << "--check needs n >= 2\n";
                    return 2;
                }
                BlochTotaroReport rep = verify_bloch_totaro(n);
                std::cerr << "d rho_" << n << ": " << rep.describe() << "\n";
                return rep.alt_equal ? 0 : 1;
            }
            return 0;
        }
        if (cycles_ff->parsed()) {
            CycleSum e = fourfold_representative();
            std::cout << cycle_sum_str(e) << "\n";
            if (check) {
                FourfoldReport rep = verify_fourfold();
                std::cerr << rep.describe() << "\n";
                if (!rep.alt_zero && !rep.raw_zero) {
                    std::cerr << "residual: " << cycle_sum_str(rep.residual_alt) << "\n";
                    return 1;
                }
            }
            return 0;
        }
        if (bar_d->parsed()) {
            BarWord w = parse_bar_word(word);
            std::cout << bar_str(bar_differential(w)) << "\n";
            return 0;
        }
        if (bar_h0->parsed()) {
            std::vector<Element> letters = {
                Element::steinberg(SymBase::a(), Flavor::plain),
                Element::steinberg(SymBase::a(), Flavor::complement),
                Element::totaro(SymBase::a(), {Flavor::plain, Flavor::complement})};
            auto basis = h0_kernel_basis(letters, trunc_len, trunc_weight);
            for (const auto& k : basis)
                std::cout << bar_str(k) << "\n";
            std::cerr << basis.size() << " kernel classes in the window\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
