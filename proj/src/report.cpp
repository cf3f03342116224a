#include "ringlat/report.hpp"

#include <ostream>
#include <sstream>

namespace ringlat {

namespace {

// additive composition length of a node: number of prime factors (with
// multiplicity) of its size
u32 additive_length(u64 size) {
    u32 len = 0;
    for (u64 p = 2; p * p <= size; ++p)
        while (size % p == 0) {
            size /= p;
            ++len;
        }
    if (size > 1) ++len;
    return len;
}

std::string node_flags_str(const IntervalLattice& L, u32 i) {
    std::string s;
    if (i == L.bottom) s += " R";
    if (i == L.top) s += " S";
    if (L.node_flags[i] & kNodePlusClosure) s += " +R";
    if (L.node_flags[i] & kNodeTClosure) s += " tR";
    if (L.node_flags[i] & kNodeAtom) s += " atom";
    return s;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string yesno(bool b) { return b ? "true" : "false"; }

}  // namespace

void render_analysis(const AnalysisBundle& b, ReportFormat fmt, std::ostream& out) {
    const bool md = fmt == ReportFormat::markdown;
    const IntervalLattice& L = b.lattice;
    const LatticeReport& r = b.report;
    auto h1 = [&](const std::string& s) {
        if (md)
            out << "# " << s << "\n\n";
        else
            out << "== " << s << " ==\n";
    };
    auto h2 = [&](const std::string& s) {
        if (md)
            out << "## " << s << "\n\n";
        else
            out << "-- " << s << " --\n";
    };
    auto kv = [&](const std::string& k, const std::string& v) {
        if (md)
            out << "- " << k << ": " << v << "\n";
        else
            out << "  " << k << ": " << v << "\n";
    };

    h1("extension " + b.ext.S->name());
    kv("base modulus", std::to_string(b.ext.S->modulus()));
    kv("rank", std::to_string(b.ext.S->rank()));
    kv("|S|", std::to_string(b.ext.S->size()));
    kv("|R|", std::to_string(b.ext.R.size()));
    if (b.ext.trivial()) kv("note", "trivial interval (R = S)");
    if (md) out << "\n";

    h2("lattice");
    kv("nodes", std::to_string(L.node_count()));
    kv("length", std::to_string(r.length));
    {
        std::ostringstream sp;
        for (size_t i = 0; i < r.chain_spectrum.size(); ++i) {
            if (i) sp << ", ";
            sp << r.chain_spectrum[i].first << "x" << r.chain_spectrum[i].second;
        }
        kv("maximal chains (length x count)", sp.str());
    }
    kv("chained", yesno(r.chained));
    kv("catenarian", yesno(r.catenarian));
    kv("modular", yesno(r.modular));
    kv("distributive", yesno(r.distributive));
    kv("semimodular", yesno(r.semimodular));
    kv("boolean", yesno(r.boolean_lattice));
    kv("b2", yesno(r.b2));
    kv("arithmetic", yesno(r.arithmetic));
    {
        std::ostringstream at;
        for (size_t i = 0; i < r.atoms.size(); ++i) {
            if (i) at << ",";
            at << r.atoms[i];
        }
        kv("atoms", "[" + at.str() + "]");
    }
    {
        std::ostringstream lw;
        for (size_t i = 0; i < r.loewy_series.size(); ++i) {
            if (i) lw << ",";
            lw << r.loewy_series[i];
        }
        kv("loewy series", "[" + lw.str() + "]");
    }
    if (r.pinched_at) {
        std::ostringstream pc;
        for (size_t i = 0; i < r.pinched_at->size(); ++i) {
            if (i) pc << ",";
            pc << (*r.pinched_at)[i];
        }
        kv("pinched at", "[" + pc.str() + "]");
    } else {
        kv("pinched at", "none found");
    }
    if (md) out << "\n";

    h2("canonical decomposition");
    kv("|+R|", std::to_string(b.dec.seminormalization.size()));
    kv("|tR|", std::to_string(b.dec.t_closure.size()));
    kv("subintegral", yesno(b.flags.subintegral));
    kv("infra-integral", yesno(b.flags.infra_integral));
    kv("seminormal", yesno(b.flags.seminormal));
    kv("t-closed", yesno(b.flags.t_closed));
    if (md) out << "\n";

    h2("nodes");
    if (md) {
        out << "| node | size | add.len | flags |\n|---|---|---|---|\n";
        for (u32 i = 0; i < L.node_count(); ++i)
            out << "| " << i << " | " << L.nodes[i].size() << " | "
                << additive_length(L.nodes[i].size()) << " |" << node_flags_str(L, i)
                << " |\n";
        out << "\n";
    } else {
        for (u32 i = 0; i < L.node_count(); ++i)
            out << "  node " << i << ": size " << L.nodes[i].size() << ", add.len "
                << additive_length(L.nodes[i].size()) << node_flags_str(L, i)
                << "\n";
    }

    h2("covers");
    for (const CoverEdge& c : L.covers) {
        std::ostringstream line;
        line << c.lo << " -> " << c.hi << "  [" << min_kind_letter(c.type.kind)
             << "]  crucial ideal size " << c.type.crucial_ideal.size()
             << ", residue degree " << c.type.residue_degree;
        if (md)
            out << "- " << line.str() << "\n";
        else
            out << "  " << line.str() << "\n";
    }
    if (md) out << "\n";

    h2("delta property");
    kv("bruteforce", yesno(b.brute.is_delta));
    kv("generators", yesno(b.generators.is_delta));
    kv("characterized", yesno(b.characterized.is_delta));
    kv("route", delta_route_name(b.characterized.route));
    if (b.brute.witness) {
        const DeltaWitness& w = *b.brute.witness;
        kv("witness",
           "nodes (" + std::to_string(w.node_t) + "," + std::to_string(w.node_u) +
               "), element " + vec_str(w.missing) + " in TU but not T+U");
    }
    if (!b.characterized.trace.empty()) {
        if (md)
            out << "\ntrace:\n\n";
        else
            out << "  trace:\n";
        for (const auto& line : b.characterized.trace)
            out << (md ? "- " : "    - ") << line << "\n";
    }
    if (md) out << "\n";

    h2("related properties");
    kv("small delta", yesno(b.small_delta));
    if (b.small_delta_witness)
        kv("small delta witness", vec_str(b.small_delta_witness->first) + " , " +
                                      vec_str(b.small_delta_witness->second));
    kv("simple", b.simple_gen ? "true, generator " + vec_str(*b.simple_gen)
                              : "false");
    if (b.pwm) {
        kv("pointwise minimal class", pwm_class_name(b.pwm->cls));
        if (b.pwm->delta_predicted)
            kv("pointwise minimal delta prediction", yesno(*b.pwm->delta_predicted));
    } else {
        kv("pointwise minimal class", "n/a (base ring not local)");
    }
}

void render_dot(const IntervalLattice& L, std::ostream& out) {
    out << "digraph interval {\n  rankdir=BT;\n  node [shape=box];\n";
    for (u32 i = 0; i < L.node_count(); ++i) {
        out << "  n" << i << " [label=\"" << i << ": len "
            << additive_length(L.nodes[i].size());
        std::string f = node_flags_str(L, i);
        if (!f.empty()) out << f;
        out << "\"];\n";
    }
    for (const CoverEdge& c : L.covers)
        out << "  n" << c.lo << " -> n" << c.hi << " [label=\""
            << min_kind_letter(c.type.kind) << "\"];\n";
    out << "}\n";
}

}  // namespace ringlat
