#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lm/arrangements.hpp"
#include "lm/circle.hpp"
#include "lm/group.hpp"
#include "lm/serialize.hpp"
#include "lm/sigma.hpp"
#include "lm/xcomplex.hpp"

using nlohmann::json;

namespace {

constexpr int kNegative = 2;

struct Output {
    bool as_json = false;
    bool dot = false;

    void emit(const json& j, const std::string& text) const {
        if (as_json) std::cout << j.dump(2) << "\n";
        else std::cout << text << "\n";
    }
};

json with_format(json j) {
    j["format"] = lm::kJsonFormat;
    return j;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw lm::ParseError("bad integer '" + item + "'", 0);
        out.push_back(v);
    }
    return out;
}

// "base|form;form"; the base may be omitted together with the bar.
lm::XPiece parse_piece(const std::string& text) {
    lm::XPiece p;
    std::string forms = text;
    if (auto bar = text.find('|'); bar != std::string::npos) {
        p.base = lm::GroupWord::parse(text.substr(0, bar), lm::Tag::G);
        forms = text.substr(bar + 1);
    }
    std::stringstream ss(forms);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(' ') == std::string::npos) continue;
        auto f = lm::SpecialForm::from_word(lm::GroupWord::parse(item));
        if (!f) throw lm::Error("'" + item + "' is not a special form");
        p.params.push_back(*f);
    }
    return p;
}

std::vector<lm::XPiece> parse_pieces(const std::vector<std::string>& texts) {
    std::vector<lm::XPiece> out;
    for (const auto& t : texts) out.push_back(parse_piece(t));
    return out;
}

std::string counts_text(const lm::CellComplex& cx) {
    std::string s = "counts";
    for (auto c : cx.counts()) s += " " + std::to_string(c);
    return s + "\neuler " + std::to_string(cx.euler());
}

std::string homology_text(const std::vector<lm::HomologyGroup>& hs) {
    std::string s;
    for (const auto& h : hs) s += (s.empty() ? "" : "\n") + ("H" + std::to_string(h.degree) + " " + h.str());
    return s;
}

lm::GroupWord parse_word(const std::string& text, const std::string& tag) {
    return tag.empty() ? lm::GroupWord::parse(text) : lm::GroupWord::parse(text, lm::parse_tag(tag));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lodha-Moore groups: words, complexes, circle coding and Sigma invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.as_json, "JSON output");
    int status = 0;

    std::string word, tag, second, name, family, group, gens, chi, n_text = "1", diagonals, vertex = "F";
    std::vector<std::string> pieces;
    bool check = false, general = false, with_cone = false;
    int n = 0;
    std::size_t maxlen = 4;
    unsigned maxp = 3;

    auto word_arg = [&](CLI::App* c) {
        c->add_option("word", word, "word, e.g. \"x[e]^-1 y[e]\"")->required();
        c->add_option("--tag", tag, "group tag: F T G yG Gy yGy Shat");
    };
    auto complex_out = [&](CLI::App* c) { c->add_flag("--dot", out.dot, "DOT 1-skeleton"); };
    auto piece_opt = [&](CLI::App* c) {
        c->add_option("--piece", pieces, "piece \"base|form;form\" (repeatable)");
    };

    auto* normalize = app.add_subcommand("normalize", "standard form");
    word_arg(normalize);
    normalize->callback([&] {
        const auto sf = lm::rewrite_standard_form(parse_word(word, tag));
        json tail = json::array();
        for (const auto& t : sf.tail) tail.push_back({{"sub", t.sub.str()}, {"exp", t.exp}});
        out.emit(with_format({{"standard_form", sf.str()}, {"head", sf.head.str()}, {"tail", tail}}), sf.str());
    });

    auto* act = app.add_subcommand("act", "bits of input.w forced by a finite input prefix");
    word_arg(act);
    act->add_option("input", second, "input prefix")->required();
    act->callback([&] {
        const auto r = lm::act_prefix(parse_word(word, tag), lm::BinaryWord::parse(second));
        out.emit(with_format({{"output", r.forced.str()}, {"exhausted", r.exhausted}}), r.forced.str());
    });

    auto* chr = app.add_subcommand("char", "character value");
    word_arg(chr);
    chr->add_option("--name", name, "chi0 chi1 psi0 psi1 psi psihat")->required();
    chr->callback([&] {
        const long v = lm::char_value(lm::parse_character(name), parse_word(word, tag));
        out.emit(with_format({{"value", v}}), std::to_string(v));
    });

    auto* wp = app.add_subcommand("wordproblem", "is the word the identity");
    word_arg(wp);
    wp->add_flag("--check", check, "exit 2 on NotIdentity");
    wp->callback([&] {
        const auto r = lm::word_problem(parse_word(word, tag));
        const std::string v = lm::word_problem_name(r.verdict);
        json j{{"verdict", v}, {"reason", r.reason}};
        std::string text = v;
        if (r.witness) {
            j["witness"] = r.witness->str();
            text += " witness " + r.witness->str();
        }
        out.emit(with_format(j), text);
        if (check && r.verdict == lm::WordProblem::NotIdentity) status = kNegative;
    });

    auto* cluster = app.add_subcommand("cluster", "cells of an admissible arrangement");
    cluster->add_option("--n", n, "dimension")->required();
    cluster->add_option("--diagonals", diagonals, "marked diagonals, e.g. 1,2");
    complex_out(cluster);
    cluster->callback([&] {
        const auto c = lm::enumerate_cells(lm::Arrangement(n, parse_int_list(diagonals)));
        if (out.dot) std::cout << lm::complex_dot(c.complex);
        else out.emit(lm::cluster_json(c), counts_text(c.complex));
    });

    auto* xcluster = app.add_subcommand("xcluster", "finite piece of X spanned by clusters");
    piece_opt(xcluster);
    xcluster->get_option("--piece")->required();
    complex_out(xcluster);
    xcluster->callback([&] {
        const auto cx = lm::assemble(parse_pieces(pieces));
        if (out.dot) {
            std::cout << lm::xcomplex_dot(cx);
            return;
        }
        const auto values = lm::morse_values(cx);
        std::string text;
        for (std::size_t v = 0; v < cx.vertex_count(); ++v)
            text += cx.complex[v].key + "  h=" + std::to_string(values[v].h) + "\n";
        out.emit(lm::xcomplex_json(cx), text + counts_text(cx.complex));
    });

    auto* asclink = app.add_subcommand("asclink", "ascending link of a vertex");
    piece_opt(asclink);
    asclink->get_option("--piece")->required();
    asclink->add_option("--vertex", vertex, "vertex name, default F");
    asclink->add_flag("--cone", with_cone, "include the cone-vertex enlargement");
    asclink->callback([&] {
        auto ps = parse_pieces(pieces);
        if (with_cone) {
            auto cone = lm::find_cone_vertex(ps);
            ps.insert(ps.end(), cone.enlarged.begin(), cone.enlarged.end());
        }
        const auto cx = lm::assemble(ps);
        const auto v = cx.complex.find(vertex);
        if (!v || cx.complex[static_cast<std::size_t>(*v)].dim != 0) throw lm::Error("no vertex '" + vertex + "'");
        const auto link = lm::ascending_link(cx, *v);
        const auto hs = lm::reduced_homology(link);
        auto j = lm::complex_json(link);
        j["reduced_homology"] = lm::homology_json(hs)["reduced_homology"];
        out.emit(j, counts_text(link) + "\n" + homology_text(hs));
    });

    auto* cone = app.add_subcommand("cone", "cone vertex F y_{0^m 1} over the ascending link of F");
    piece_opt(cone);
    cone->callback([&] {
        const auto c = lm::find_cone_vertex(parse_pieces(pieces));
        const std::string sub = std::string(c.m, '0') + "1";
        out.emit(with_format({{"m", c.m}, {"vertex", "F y[" + sub + "]"}, {"verified", c.verified}}),
                 "m " + std::to_string(c.m) + "\nvertex F y[" + sub + "]\nverified " + (c.verified ? "true" : "false"));
    });

    auto* homology = app.add_subcommand("homology", "reduced homology of a cluster or of X pieces");
    homology->add_option("--n", n, "cluster dimension");
    homology->add_option("--diagonals", diagonals, "marked diagonals");
    piece_opt(homology);
    homology->callback([&] {
        lm::CellComplex cx;
        if (!pieces.empty()) cx = lm::assemble(parse_pieces(pieces)).complex;
        else cx = lm::enumerate_cells(lm::Arrangement(n, parse_int_list(diagonals))).complex;
        const auto hs = lm::reduced_homology(cx);
        out.emit(lm::homology_json(hs), homology_text(hs));
    });

    std::string prefix, tail_bit;
    auto* phi = app.add_subcommand("phi", "rational coding of prefix.tail^inf");
    phi->add_option("prefix", prefix, "binary prefix or e")->required();
    phi->add_option("tail", tail_bit, "0 or 1")->required();
    phi->callback([&] {
        if (tail_bit.size() != 1) throw lm::Error("tail must be 0 or 1");
        const auto q = lm::phi(lm::TailPoint(lm::BinaryWord::parse(prefix), tail_bit[0]));
        out.emit(with_format({{"value", q.str()}}), q.str());
    });

    auto* phiinv = app.add_subcommand("phiinv", "the two sequences coded by a rational");
    phiinv->add_option("q", second, "p/q, p or inf")->required();
    phiinv->callback([&] {
        const auto [a, b] = lm::phi_inverse(lm::ProjectivePoint::parse(second));
        out.emit(with_format({{"points", {a.str(), b.str()}}}), a.str() + " " + b.str());
    });

    auto* ins = app.add_subcommand("ins", "membership in S");
    word_arg(ins);
    ins->add_flag("--check", check, "exit 2 when not in S");
    ins->callback([&] {
        const bool r = lm::in_S(parse_word(word, tag));
        out.emit(with_format({{"in_S", r}}), r ? "true" : "false");
        if (check && !r) status = kNegative;
    });

    auto* witness = app.add_subcommand("witness", "factor an element of S");
    word_arg(witness);
    witness->add_option("--family", family, "PairConsecutive PairNonConsecutive Balanced0 Balanced1")->required();
    witness->callback([&] {
        const auto fs = lm::s_witness(parse_word(word, tag), lm::parse_witness_family(family));
        json arr = json::array();
        std::string text;
        for (const auto& f : fs) {
            arr.push_back({{"factor", f.str()}, {"word", f.word().str()}});
            text += (text.empty() ? "" : "\n") + f.str();
        }
        out.emit(with_format({{"factors", arr}}), text);
    });

    auto* relcheck = app.add_subcommand("relcheck", "check the relators of S-hat");
    relcheck->add_option("--maxlen", maxlen, "subscript length bound");
    relcheck->add_option("--maxp", maxp, "p-index bound");
    relcheck->callback([&] {
        const auto rs = lm::relator_schemas(maxlen, maxp);
        json bad = json::array();
        for (const auto& r : rs) {
            const bool acts = lm::agrees(lm::equal_at_depth(r.word, lm::GroupWord(lm::Tag::Shat)));
            const bool psi = lm::char_value(lm::Character::PsiHat, r.word) == 0;
            if (!acts || !psi) bad.push_back({{"family", r.family}, {"relator", r.word.str()}});
        }
        std::string text = std::to_string(rs.size()) + " relators, " + std::to_string(bad.size()) + " failing";
        for (const auto& b : bad) text += "\n  (" + std::to_string(b["family"].get<int>()) + ") " + b["relator"].get<std::string>();
        out.emit(with_format({{"relators", rs.size()}, {"failing", bad}}), text);
        if (!bad.empty()) status = kNegative;
    });

    group = "G";
    auto* classify = app.add_subcommand("classify", "finiteness class of the normal subgroup over a lattice");
    classify->add_option("--group", group, "G Gy yG yGy");
    classify->add_option("--gens", gens, "lattice generators, e.g. \"1,0,0;0,1,1\"");
    classify->add_flag("--general", general, "subgroup not known to contain the commutator subgroup");
    classify->callback([&] {
        const auto c = lm::classify_normal_subgroup(lm::LatticeSubgroup::parse(gens), lm::parse_tag(group), !general);
        out.emit(with_format({{"class", lm::finiteness_class_name(c)}}), lm::finiteness_class_name(c));
    });

    auto* sigma = app.add_subcommand("sigma", "membership of a character class in Sigma^n");
    sigma->add_option("--group", group, "G Gy yG yGy");
    sigma->add_option("--char", chi, "coordinates in the group's character basis")->required();
    sigma->add_option("--n", n_text, "n >= 1 or inf");
    sigma->add_flag("--check", check, "exit 2 when not a member");
    sigma->callback([&] {
        unsigned level = lm::kSigmaInfinity;
        if (n_text != "inf") {
            const auto v = parse_int_list(n_text);
            if (v.size() != 1 || v[0] < 1) throw lm::Error("--n must be a positive integer or inf");
            level = static_cast<unsigned>(v[0]);
        }
        const bool r = lm::sigma_membership(lm::parse_tag(group), lm::CharacterVector::parse(chi), level);
        out.emit(with_format({{"member", r}}), r ? "true" : "false");
        if (check && !r) status = kNegative;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const lm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}
