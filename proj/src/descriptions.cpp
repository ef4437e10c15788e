#include "eh/descriptions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "eh/error.hpp"
#include "eh/homology.hpp"

namespace eh {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
    std::vector<int> columns;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        Line line;
        line.number = number;
        std::size_t pos = 0;
        while (pos < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[pos]))) {
                ++pos;
                continue;
            }
            if (raw[pos] == '#')
                break;
            std::size_t start = pos;
            if (raw[pos] == '{' || raw[pos] == '}' || raw[pos] == '=') {
                ++pos;
            } else if (raw[pos] == '-' && pos + 1 < raw.size() && raw[pos + 1] == '>') {
                pos += 2;
            } else {
                while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos])) &&
                       raw[pos] != '{' && raw[pos] != '}' && raw[pos] != '#' && raw[pos] != '=' &&
                       !(raw[pos] == '-' && pos + 1 < raw.size() && raw[pos + 1] == '>'))
                    ++pos;
            }
            line.tokens.push_back(raw.substr(start, pos - start));
            line.columns.push_back(static_cast<int>(start) + 1);
        }
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const Line& line, std::size_t idx, const std::string& what) {
    if (idx >= line.tokens.size())
        throw ParseError(line.number, line.tokens.empty() ? 1 : line.columns.back(), "expected " + what);
    const std::string& t = line.tokens[idx];
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(line.number, line.columns[idx], what + " must be a nonnegative integer, got '" + t + "'");
    return std::stoi(t);
}

const std::string& expect_token(const Line& line, std::size_t idx, const std::string& what) {
    if (idx >= line.tokens.size())
        throw ParseError(line.number, line.tokens.empty() ? 1 : line.columns.back(), "expected " + what);
    return line.tokens[idx];
}

SimplexWord parse_word(const Line& line, std::size_t from, std::size_t to, const SpacePtr& target,
                       int expected_dim) {
    std::vector<int> etas;
    std::size_t idx = from;
    while (idx < to) {
        const std::string& t = line.tokens[idx];
        if (t.size() >= 2 && t[0] == 's' &&
            std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
            etas.push_back(std::stoi(t.substr(1)));
            ++idx;
            continue;
        }
        break;
    }
    if (idx + 1 != to)
        throw ParseError(line.number, line.columns[from], "expected degeneracy operators followed by one simplex id");
    const std::string& base = line.tokens[idx];
    int base_dim = expected_dim - static_cast<int>(etas.size());
    if (base_dim < 0 || !target->has_simplex(base_dim, base))
        throw InputError("table entry maps to unknown simplex '" + base + "' (expected dimension " +
                         std::to_string(base_dim) + ")");
    for (std::size_t k = 0; k + 1 < etas.size(); ++k)
        if (etas[k] <= etas[k + 1])
            throw InputError("degeneracy word is not canonical (indices must strictly decrease)");
    return SimplexWord{etas, base, base_dim};
}

struct Parser {
    Description doc;

    const SpaceBinding& space(const Line& line, std::size_t idx) const {
        const std::string& name = expect_token(line, idx, "space name");
        auto it = doc.spaces.find(name);
        if (it == doc.spaces.end())
            throw InputError("unknown space '" + name + "'");
        return it->second;
    }
    const MorphismBinding& morphism(const Line& line, std::size_t idx) const {
        const std::string& name = expect_token(line, idx, "morphism name");
        auto it = doc.morphisms.find(name);
        if (it == doc.morphisms.end())
            throw InputError("unknown morphism '" + name + "'");
        return it->second;
    }

    void bind_space(const std::string& name, SpaceBinding binding) {
        if (doc.spaces.count(name) || doc.morphisms.count(name))
            throw InputError("name '" + name + "' is already bound");
        doc.spaces.emplace(name, std::move(binding));
        doc.binding_order.push_back(name);
    }
    void bind_morphism(const std::string& name, MorphismBinding binding) {
        if (doc.spaces.count(name) || doc.morphisms.count(name))
            throw InputError("name '" + name + "' is already bound");
        doc.morphisms.emplace(name, std::move(binding));
        doc.binding_order.push_back(name);
    }

    void space_statement(const Line& line) {
        const std::string& name = expect_token(line, 1, "binding name");
        if (expect_token(line, 2, "'='") != "=")
            throw ParseError(line.number, line.columns[2], "expected '='");
        const std::string& kind = expect_token(line, 3, "space builder");
        SpaceBinding b;
        b.kind = kind;
        if (kind == "point") {
            b.space = space_point();
        } else if (kind == "empty") {
            b.space = space_empty();
        } else if (kind == "sphere") {
            b.space = space_sphere(parse_int(line, 4, "dimension"));
            b.args = {line.tokens[4]};
        } else if (kind == "circle") {
            b.space = space_circle(parse_int(line, 4, "edge count"));
            b.args = {line.tokens[4]};
        } else if (kind == "delta") {
            b.space = space_delta(parse_int(line, 4, "dimension"));
            b.args = {line.tokens[4]};
        } else if (kind == "product") {
            const SpaceBinding& x = space(line, 4);
            const SpaceBinding& y = space(line, 5);
            b.space = cartesian_product(x.space, y.space).space;
            b.args = {line.tokens[4], line.tokens[5]};
        } else if (kind == "wedge") {
            const SpaceBinding& y = space(line, 4);
            const SpaceBinding& z = space(line, 5);
            std::string v0 = line.tokens.size() > 6 ? line.tokens[6] : first_vertex(y);
            std::string v1 = line.tokens.size() > 7 ? line.tokens[7] : first_vertex(z);
            Span span = wedge_span(y.space, z.space, v0, v1);
            b.space = pushout_space(span.f, span.g).space;
            b.span = std::move(span);
            b.args = {line.tokens[4], line.tokens[5], v0, v1};
        } else if (kind == "join") {
            const SpaceBinding& x = space(line, 4);
            const SpaceBinding& y = space(line, 5);
            Span span = join_span(x.space, y.space);
            b.space = pushout_space(span.f, span.g).space;
            b.span = std::move(span);
            b.args = {line.tokens[4], line.tokens[5]};
        } else if (kind == "suspension") {
            const SpaceBinding& x = space(line, 4);
            Span span = suspension_span(x.space);
            b.space = pushout_space(span.f, span.g).space;
            b.span = std::move(span);
            b.args = {line.tokens[4]};
        } else if (kind == "pushout") {
            const MorphismBinding& f = morphism(line, 4);
            const MorphismBinding& g = morphism(line, 5);
            Span span{f.morphism, g.morphism};
            b.space = pushout_space(span.f, span.g).space;
            b.span = std::move(span);
            b.args = {line.tokens[4], line.tokens[5]};
        } else {
            throw InputError("unknown space builder '" + kind + "'");
        }
        bind_space(name, std::move(b));
    }

    static std::string first_vertex(const SpaceBinding& b) {
        if (b.space->count(0) == 0)
            throw InputError("space has no vertices to wedge at");
        return b.space->simplices(0).front();
    }

    // table bodies: consumed from the token stream across lines
    void morphism_statement(std::vector<Line>& lines, std::size_t& li) {
        const Line& line = lines[li];
        const std::string& name = expect_token(line, 1, "binding name");
        if (expect_token(line, 2, "'='") != "=")
            throw ParseError(line.number, line.columns[2], "expected '='");
        const std::string& kind = expect_token(line, 3, "morphism builder");
        std::optional<SimplicialMorphism> built;
        std::vector<std::string> args;
        std::vector<std::pair<std::string, std::string>> table_rows;
        if (kind == "degree_map") {
            const SpaceBinding& src = space(line, 4);
            const SpaceBinding& dst = space(line, 5);
            if (src.kind != "circle" && src.kind != "sphere")
                throw InputError("degree_map: source must be a circle binding");
            if (dst.space->count(1) != 1 || dst.space->count(0) != 1)
                throw InputError("degree_map: target must be the one-edge circle");
            const std::string& edge = dst.space->simplices(1).front();
            const std::string& vertex = dst.space->simplices(0).front();
            built = SimplicialMorphism::make(
                src.space, dst.space,
                [&](int dim, const std::string&) {
                    return dim == 0 ? plain_word(0, vertex) : plain_word(1, edge);
                },
                "degree_map");
            args = {line.tokens[4], line.tokens[5]};
        } else if (kind == "identity") {
            const SpaceBinding& src = space(line, 4);
            built = SimplicialMorphism::identity(src.space);
            args = {line.tokens[4]};
        } else if (kind == "constant") {
            const SpaceBinding& src = space(line, 4);
            const SpaceBinding& dst = space(line, 5);
            std::string vertex = line.tokens.size() > 6 ? line.tokens[6] : first_vertex(dst);
            built = constant_morphism(src.space, dst.space, vertex);
            args = {line.tokens[4], line.tokens[5], vertex};
        } else if (kind == "table") {
            const SpaceBinding& src = space(line, 4);
            const SpaceBinding& dst = space(line, 5);
            if (expect_token(line, 6, "'{'") != "{")
                throw ParseError(line.number, line.columns[6], "expected '{'");
            std::map<std::pair<int, std::string>, SimplexWord> table;
            bool closed = false;
            std::size_t row_i = li + 1;
            for (; row_i < lines.size(); ++row_i) {
                const Line& row = lines[row_i];
                if (row.tokens[0] == "}") {
                    closed = true;
                    break;
                }
                const std::string& simplex = expect_token(row, 0, "source simplex id");
                int dim = -1;
                for (int d = 0; d <= src.space->top_dim() && dim < 0; ++d)
                    if (src.space->has_simplex(d, simplex))
                        dim = d;
                if (dim < 0)
                    throw InputError("table entry for unknown simplex '" + simplex + "'");
                if (expect_token(row, 1, "'->'") != "->")
                    throw ParseError(row.number, row.columns[1], "expected '->'");
                table[{dim, simplex}] = parse_word(row, 2, row.tokens.size(), dst.space, dim);
            }
            if (!closed)
                throw ParseError(lines.back().number, 1, "unterminated table block");
            li = row_i;
            try {
                built = SimplicialMorphism::make(
                    src.space, dst.space,
                    [&table](int dim, const std::string& id) {
                        auto it = table.find({dim, id});
                        if (it == table.end())
                            throw InputError("table is missing an entry for simplex '" + id + "'");
                        return it->second;
                    },
                    "table");
            } catch (const InputError& e) {
                throw VerifyError(std::string("invalid morphism table: ") + e.what());
            }
            args = {line.tokens[4], line.tokens[5]};
            for (const auto& [key, word] : table)
                table_rows.push_back({key.second, word.str()});
        } else {
            throw InputError("unknown morphism builder '" + kind + "'");
        }
        bind_morphism(name, MorphismBinding{std::move(*built), kind, std::move(args), std::move(table_rows)});
    }
};

}  // namespace

const SpaceBinding& Description::space(const std::string& name) const {
    auto it = spaces.find(name);
    if (it == spaces.end())
        throw InputError("unknown space '" + name + "'");
    return it->second;
}

const MorphismBinding& Description::morphism(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end())
        throw InputError("unknown morphism '" + name + "'");
    return it->second;
}

Description parse_description(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    Parser parser;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string& head = line.tokens[0];
        if (head == "space") {
            parser.space_statement(line);
        } else if (head == "morphism") {
            parser.morphism_statement(lines, li);
        } else {
            throw ParseError(line.number, line.columns[0],
                             "expected 'space' or 'morphism', got '" + head + "'");
        }
    }
    return std::move(parser.doc);
}

std::string render_description(const Description& doc) {
    std::ostringstream os;
    for (const std::string& name : doc.binding_order) {
        auto sp = doc.spaces.find(name);
        if (sp != doc.spaces.end()) {
            os << "space " << name << " = " << sp->second.kind;
            for (const std::string& a : sp->second.args)
                os << " " << a;
            os << "\n";
            continue;
        }
        const MorphismBinding& m = doc.morphisms.at(name);
        os << "morphism " << name << " = " << m.kind;
        for (const std::string& a : m.args)
            os << " " << a;
        if (m.kind == "table") {
            os << " {\n";
            for (const auto& [simplex, word] : m.table_rows)
                os << "  " << simplex << " -> " << word << "\n";
            os << "}";
        }
        os << "\n";
    }
    return os.str();
}

namespace {

struct DegreeRange {
    int lo;
    int hi;
};

DegreeRange parse_range(const std::string& s) {
    auto dots = s.find("..");
    auto to_int = [&](const std::string& part) {
        if (part.empty())
            throw InputError("bad degree range '" + s + "'");
        std::size_t k = part[0] == '-' ? 1 : 0;
        if (k == part.size())
            throw InputError("bad degree range '" + s + "'");
        for (; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k])))
                throw InputError("bad degree range '" + s + "'");
        return std::stoi(part);
    };
    if (dots == std::string::npos) {
        int n = to_int(s);
        return DegreeRange{n, n};
    }
    DegreeRange r{to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
    if (r.hi < r.lo)
        throw InputError("empty degree range '" + s + "'");
    return r;
}

void run_homology(std::ostream& out, const Description& doc, const std::string& name,
                  const std::string& range_text) {
    const SpaceBinding& b = doc.space(name);
    DegreeRange range = parse_range(range_text);
    std::optional<PushoutEfhm> pipeline;
    if (b.span)
        pipeline.emplace(pushout_efhm(b.span->f, b.span->g));
    for (int n = range.lo; n <= range.hi; ++n) {
        AbelianGroup g = pipeline ? homology_via_equivalence(pipeline->equivalence, n)
                                  : homology_effective(*normalized_chain_complex(*b.space), n);
        out << "Homology in dimension " << n << ":\n";
        for (const std::string& line : g.component_lines())
            out << line << "\n";
        if (n != range.hi)
            out << "\n";
    }
}

int run_verify(std::ostream& out, const Description& doc, const std::string& name) {
    const SpaceBinding* sb = doc.spaces.count(name) ? &doc.spaces.at(name) : nullptr;
    int failures = 0;
    auto check = [&](const std::string& what, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok)
            ++failures;
    };
    if (sb) {
        VerifyReport simp = verify_simplicial(*sb->space);
        check("simplicial identities of '" + name + "'", simp.ok);
        ComplexPtr c = normalized_chain_complex(*sb->space);
        check("d^2 = 0 on C(" + name + ")", !c->d_squared_witness());
        if (sb->span) {
            PushoutEfhm p = pushout_efhm(sb->span->f, sb->span->g);
            check("pushout SES identities", verify_ses(ses_from_pushout(sb->span->f, sb->span->g).ses).ok);
            check("chi is a chain map", !p.chi.chain_map_witness());
            check("left reduction equations", verify_reduction(p.equivalence.lrdct()).ok);
            check("right reduction equations", verify_reduction(p.equivalence.rrdct()).ok);
            bool match = true;
            for (int n = p.complex_p->lo() - 1; n <= p.complex_p->hi() + 1 && match; ++n)
                match = homology_effective(*p.complex_p, n) == homology_via_equivalence(p.equivalence, n);
            check("effective homology matches direct homology", match);
        }
    } else {
        const MorphismBinding& mb = doc.morphism(name);
        // construction already validated face commutation; re-derive here
        bool ok = true;
        const SimplicialMorphism& m = mb.morphism;
        for (int dim = 1; dim <= m.source()->top_dim() && ok; ++dim)
            for (const std::string& id : m.source()->simplices(dim)) {
                for (int i = 0; i <= dim && ok; ++i)
                    ok = m.apply(m.source()->face(dim, id, i)) ==
                         canonical_face(*m.target(), i, m.map(dim, id));
            }
        check("face commutation of '" + name + "'", ok);
    }
    return failures == 0 ? 0 : 1;
}

void run_inspect(std::ostream& out, const Description& doc, const std::string& name) {
    const SpaceBinding& b = doc.space(name);
    out << name << ": " << b.space->describe() << "\n";
    ComplexPtr c = normalized_chain_complex(*b.space);
    out << "chain ranks:";
    for (int n = c->lo(); n <= c->hi(); ++n)
        out << " " << n << ":" << c->rank(n);
    out << "\n";
    if (!b.span) {
        out << "no pipeline intermediates (not a pushout-backed space)\n";
        return;
    }
    PushoutEfhm p = pushout_efhm(b.span->f, b.span->g);
    auto ranks = [&out](const std::string& label, const ChainComplex& cc) {
        out << label << ":";
        for (int n = cc.lo(); n <= cc.hi(); ++n)
            out << " " << n << ":" << cc.rank(n);
        out << "\n";
    };
    ranks("rc", *p.rc);
    ranks("ds", *p.ds);
    ranks("sds", *p.sds);
    ranks("cone2(chi)", *p.cone2_chi);
    ranks("effective complex", *p.equivalence.right());
    long nonzero = 0;
    for (int n = p.rc->lo(); n <= p.rc->hi(); ++n)
        for (const std::string& id : p.rc->basis(n))
            if (!p.chi(n, id).is_zero())
                ++nonzero;
    out << "chi: " << nonzero << " generator(s) with nonzero image\n";
}

}  // namespace

RunResult run_command(const std::string& document_text, const std::vector<std::string>& args) {
    RunResult result;
    std::ostringstream out;
    try {
        Description doc = parse_description(document_text);
        if (args.empty())
            throw InputError("missing command (homology | verify | inspect)");
        const std::string& command = args[0];
        if (command == "homology") {
            if (args.size() != 3)
                throw InputError("usage: homology <name> <a..b>");
            run_homology(out, doc, args[1], args[2]);
        } else if (command == "verify") {
            if (args.size() != 2)
                throw InputError("usage: verify <name>");
            result.exit_code = run_verify(out, doc, args[1]);
        } else if (command == "inspect") {
            if (args.size() != 2)
                throw InputError("usage: inspect <name>");
            run_inspect(out, doc, args[1]);
        } else {
            throw InputError("unknown command '" + command + "'");
        }
    } catch (const ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const VerifyError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 1;
    } catch (const Error& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    }
    result.out = out.str();
    return result;
}

}  // namespace eh
