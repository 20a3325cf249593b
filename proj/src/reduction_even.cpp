#include <sandwich/error.hpp>
#include <sandwich/reduction_even.hpp>

#include <map>

namespace sandwich {

const KneePair & EvenGadgetMap::incidence(int variable, int clause) const
{
    for (const auto & k : incidences)
        if (k.variable == variable && k.clause == clause)
            return k;
    throw Error("variable x" + std::to_string(variable + 1) + " does not occur in clause " + std::to_string(clause + 1));
}

Vertex EvenGadgetMap::knee(const Literal & l, int clause) const
{
    const auto & k = incidence(l.var, clause);
    return l.positive ? k.positive : k.negative;
}

std::array<Vertex, 3> EvenGadgetMap::active_knees(int clause) const
{
    std::array<Vertex, 3> out{};
    for (int q = 0; q < 3; ++q)
        out[q] = knee(clauses[clause][q], clause);
    return out;
}

std::array<Vertex, 3> EvenGadgetMap::inactive_knees(int clause) const
{
    std::array<Vertex, 3> out{};
    for (int q = 0; q < 3; ++q)
        out[q] = knee(clauses[clause][q].negated(), clause);
    return out;
}

std::pair<SandwichInstance, EvenGadgetMap> build_even_instance(const CnfFormula & f)
{
    f.require_valid();
    InstanceBuilder b;
    EvenGadgetMap m;
    m.clauses = f.clauses;
    m.head = b.add_vertex("H");
    m.foot = b.add_vertex("F");
    m.w1 = b.add_vertex("W1");
    m.w2 = b.add_vertex("W2");
    for (int i = 0; i < f.variables; ++i) {
        m.shoulder_positive.push_back(b.add_vertex("S_" + literal_name({i, true})));
        m.shoulder_negative.push_back(b.add_vertex("S_" + literal_name({i, false})));
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j)
        for (const auto & lit : f.clauses[j]) {
            KneePair k;
            k.variable = lit.var;
            k.clause = static_cast<int>(j);
            const std::string sup = "^" + std::to_string(j + 1);
            k.positive = b.add_vertex("K_" + literal_name({lit.var, true}) + sup);
            k.negative = b.add_vertex("K_" + literal_name({lit.var, false}) + sup);
            m.incidences.push_back(k);
        }

    const Vertex h = m.head, ft = m.foot;
    std::map<Edge, char> cls; // 'f' forced, 'x' forbidden
    auto forced = [&](Vertex a, Vertex c) { cls[Edge(a, c)] = 'f'; };
    auto forbid = [&](Vertex a, Vertex c) { cls[Edge(a, c)] = 'x'; };

    for (const auto & k : m.incidences) {
        const Vertex sp = m.shoulder_positive[k.variable], sn = m.shoulder_negative[k.variable];
        forced(h, sp);
        forced(sp, k.negative);
        forced(k.negative, ft);
        forced(ft, k.positive);
        forced(k.positive, sn);
        forced(sn, h);
        forbid(k.positive, k.negative);
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const auto act = m.active_knees(static_cast<int>(j));
        const auto ina = m.inactive_knees(static_cast<int>(j));
        forced(act[0], act[1]);
        forced(act[1], act[2]);
        forced(act[0], act[2]);
        forced(ina[1], act[0]);
        forced(ina[2], act[1]);
        forced(ina[0], act[2]);
    }
    forbid(h, ft);
    for (int i = 0; i < f.variables; ++i)
        forbid(m.shoulder_positive[i], m.shoulder_negative[i]);
    forced(h, m.w1);
    forced(m.w1, m.w2);
    forced(m.w2, ft);
    for (Vertex v = 0; v < b.order(); ++v)
        for (Vertex w : {m.w1, m.w2})
            if (v != w && ! cls.contains(Edge(v, w)))
                forbid(v, w);

    for (Vertex u = 0; u < b.order(); ++u)
        for (Vertex v = u + 1; v < b.order(); ++v) {
            auto it = cls.find(Edge(u, v));
            if (it == cls.end())
                b.optional(u, v);
            else if (it->second == 'f')
                b.forced(u, v);
        }
    return {b.build(), std::move(m)};
}

std::array<Edge, 3> orientation_edges(const EvenGadgetMap & map, const KneePair & k, bool positive)
{
    const Vertex knee = positive ? k.positive : k.negative;
    const Vertex shoulder = positive ? map.shoulder_positive[k.variable] : map.shoulder_negative[k.variable];
    return {Edge(map.head, knee), Edge(knee, shoulder), Edge(shoulder, map.foot)};
}

Graph completion_from_assignment(const CnfFormula & f, const Assignment & a, const EvenGadgetMap & map)
{
    if (static_cast<int>(a.size()) != f.variables)
        throw Error("assignment size does not match the formula");
    const auto inst = build_even_instance(f).first;
    Graph g = inst.forced_graph();
    std::vector<Vertex> true_shoulders, true_knees, knees;
    for (int i = 0; i < f.variables; ++i)
        true_shoulders.push_back(a[i] ? map.shoulder_positive[i] : map.shoulder_negative[i]);
    for (const auto & k : map.incidences) {
        for (const auto & e : orientation_edges(map, k, a[k.variable]))
            g.add_edge(e.u, e.v);
        true_knees.push_back(a[k.variable] ? k.positive : k.negative);
        knees.push_back(k.positive);
        knees.push_back(k.negative);
    }
    auto clique = [&](const std::vector<Vertex> & vs) {
        for (std::size_t x = 0; x < vs.size(); ++x)
            for (std::size_t y = x + 1; y < vs.size(); ++y)
                g.add_edge(vs[x], vs[y]);
    };
    clique(true_shoulders);
    clique(true_knees);
    for (auto s : true_shoulders)
        for (auto k : knees)
            g.add_edge(s, k);
    return g;
}

std::vector<Orientation> read_orientations(const EvenGadgetMap & map, const Graph & g)
{
    std::vector<Orientation> out;
    auto all_present = [&](const std::array<Edge, 3> & es) {
        for (const auto & e : es)
            if (! g.adjacent(e.u, e.v))
                return false;
        return true;
    };
    for (const auto & k : map.incidences) {
        const bool pos = all_present(orientation_edges(map, k, true));
        const bool neg = all_present(orientation_edges(map, k, false));
        out.push_back(pos && ! neg ? Orientation::positive : neg && ! pos ? Orientation::negative : Orientation::undecided);
    }
    return out;
}

std::variant<Assignment, OrientationError> extract_even_assignment(const EvenGadgetMap & map, const Graph & g)
{
    const int n = map.variables();
    for (int i = 0; i < n; ++i) {
        const Vertex sp = map.shoulder_positive[i], sn = map.shoulder_negative[i];
        if (g.adjacent(map.foot, sp) && g.adjacent(map.foot, sn)) {
            OrientationError err;
            err.kind = OrientationError::Kind::mixed;
            err.variable = i;
            err.witness = make_cycle({map.head, sp, map.foot, sn});
            return err;
        }
    }
    Assignment a(static_cast<std::size_t>(n), false);
    const auto orient = read_orientations(map, g);
    std::vector<int> seen(static_cast<std::size_t>(n), 0); // 0 none, 1 positive, 2 negative
    for (std::size_t x = 0; x < map.incidences.size(); ++x) {
        const auto & k = map.incidences[x];
        if (orient[x] == Orientation::undecided) {
            OrientationError err;
            err.kind = OrientationError::Kind::incomplete;
            err.variable = k.variable;
            err.clause = k.clause;
            return err;
        }
        const int o = orient[x] == Orientation::positive ? 1 : 2;
        if (seen[k.variable] != 0 && seen[k.variable] != o) {
            OrientationError err;
            err.kind = OrientationError::Kind::mixed;
            err.variable = k.variable;
            err.clause = k.clause;
            return err;
        }
        seen[k.variable] = o;
        a[k.variable] = o == 1;
    }
    return a;
}

namespace {
    class Closure {
    public:
        Closure(const EvenGadgetMap & m, const PartialCompletion & pc) : m_(m), pc_(pc) {}

        OrientationPropagation run()
        {
            bool changed = true;
            while (changed && ! out_.contradiction) {
                changed_ = false;
                incidence_rules();
                if (! out_.contradiction && ! changed_)
                    clause_rules();
                changed = changed_;
            }
            if (! out_.contradiction)
                collect_pending();
            return std::move(out_);
        }

    private:
        PairState state(Vertex a, Vertex b) const
        {
            const PairState s = pc_.state(a, b);
            if (s != PairState::undecided)
                return s;
            auto it = implied_.find(Edge(a, b));
            if (it == implied_.end())
                return s;
            return it->second ? PairState::in : PairState::out;
        }
        bool present(Vertex a, Vertex b) const
        {
            auto s = state(a, b);
            return s == PairState::forced || s == PairState::in;
        }
        bool excluded(Vertex a, Vertex b) const
        {
            auto s = state(a, b);
            return s == PairState::forbidden || s == PairState::out;
        }

        void fail(const char * rule, std::vector<Vertex> cycle)
        {
            if (! out_.contradiction)
                out_.contradiction = OrientationContradiction{rule, make_cycle(std::move(cycle))};
        }

        // Records `a b` as in/out; `cycle` certifies the contradiction when
        // the pair is already decided the other way.
        bool require(Vertex a, Vertex b, bool in, const char * rule, std::vector<Vertex> cycle)
        {
            if (out_.contradiction)
                return false;
            const PairState s = state(a, b);
            if (s == PairState::undecided) {
                implied_[Edge(a, b)] = in;
                out_.implied.push_back(Decision{Edge(a, b), in});
                changed_ = true;
                return true;
            }
            if (in ? (s == PairState::forced || s == PairState::in) : (s == PairState::forbidden || s == PairState::out))
                return true;
            fail(rule, std::move(cycle));
            return false;
        }

        void incidence_rules()
        {
            const Vertex h = m_.head, f = m_.foot;
            for (const auto & k : m_.incidences) {
                if (out_.contradiction)
                    return;
                const Vertex kp = k.positive, kn = k.negative;
                const Vertex sp = m_.shoulder_positive[k.variable], sn = m_.shoulder_negative[k.variable];
                // R1: six-holes H W1 W2 F K S need HK or FS.
                for (auto [kk, ss] : {std::pair{kp, sn}, std::pair{kn, sp}}) {
                    const std::vector<Vertex> hole{h, m_.w1, m_.w2, f, kk, ss};
                    if (excluded(h, kk) && excluded(f, ss)) {
                        fail("R1", hole);
                        return;
                    }
                    if (excluded(h, kk))
                        require(f, ss, true, "R1", hole);
                    else if (excluded(f, ss))
                        require(h, kk, true, "R1", hole);
                }
                // R2: H sees at most one knee of the incidence.
                if (present(h, kp))
                    require(h, kn, false, "R2", {h, kp, f, kn});
                if (present(h, kn))
                    require(h, kp, false, "R2", {h, kn, f, kp});
                // R3 / R4: an oriented HK, FS pair needs its K-S chord.
                if (present(h, kp) && present(f, sp))
                    require(kp, sp, true, "R3", {h, kp, f, sp});
                if (present(h, kn) && present(f, sn))
                    require(kn, sn, true, "R4", {h, kn, f, sn});
                // F sees at most one shoulder of a variable.
                if (present(f, sp))
                    require(f, sn, false, "R3", {h, sp, f, sn});
                if (present(f, sn))
                    require(f, sp, false, "R4", {h, sn, f, sp});
            }
        }

        // R5: if all three inactive knees of a clause see H, the C4s through
        // H and F force edges among the knees until the sun closes a C4.
        void clause_rules()
        {
            const Vertex h = m_.head, f = m_.foot;
            for (std::size_t j = 0; j < m_.clauses.size() && ! out_.contradiction; ++j) {
                const auto act = m_.active_knees(static_cast<int>(j));
                const auto ina = m_.inactive_knees(static_cast<int>(j));
                if (! (present(h, ina[0]) && present(h, ina[1]) && present(h, ina[2])))
                    continue;
                if (! require(ina[2], ina[0], true, "R5", {h, ina[2], f, ina[0]}))
                    return;
                if (! require(ina[0], ina[1], true, "R5", {h, ina[0], f, ina[1]}))
                    return;
                if (! require(act[1], ina[0], true, "R5", {ina[2], act[1], act[2], ina[0]}))
                    return;
                fail("R5", {act[0], act[1], ina[0], ina[1]});
            }
        }

        void collect_pending()
        {
            const Vertex h = m_.head, f = m_.foot;
            for (const auto & k : m_.incidences) {
                const Vertex sp = m_.shoulder_positive[k.variable], sn = m_.shoulder_negative[k.variable];
                for (auto [kk, ss] : {std::pair{k.positive, sn}, std::pair{k.negative, sp}})
                    if (state(h, kk) == PairState::undecided && state(f, ss) == PairState::undecided)
                        out_.pending.push_back(BinaryChoice{Edge(h, kk), Edge(f, ss), {h, m_.w1, m_.w2, f, kk, ss}});
            }
        }

        const EvenGadgetMap & m_;
        const PartialCompletion & pc_;
        std::map<Edge, bool> implied_;
        OrientationPropagation out_;
        bool changed_ = false;
    };
} // namespace

OrientationPropagation propagate_orientations(const EvenGadgetMap & map, const PartialCompletion & decided)
{
    return Closure(map, decided).run();
}

OrientationPropagation propagate_orientations(
    const SandwichInstance & inst, const EvenGadgetMap & map, const std::vector<Decision> & decisions)
{
    PartialCompletion pc(inst);
    for (const auto & d : decisions)
        if (! pc.decide(d))
            throw Error("decision on " + inst.label(d.edge.u) + "-" + inst.label(d.edge.v)
                + " is not an optional edge or conflicts with an earlier decision");
    return propagate_orientations(map, pc);
}

std::vector<SeedChoice> orientation_seeds(const EvenGadgetMap & map)
{
    std::vector<SeedChoice> seeds;
    for (int i = 0; i < map.variables(); ++i) {
        SeedChoice choice;
        for (bool positive : {true, false}) {
            std::vector<Decision> ds;
            for (const auto & k : map.incidences) {
                if (k.variable != i)
                    continue;
                for (const auto & e : orientation_edges(map, k, positive))
                    ds.push_back({e, true});
                ds.push_back({Edge(map.head, positive ? k.negative : k.positive), false});
            }
            if (ds.empty())
                break;
            const Vertex other = positive ? map.shoulder_negative[i] : map.shoulder_positive[i];
            ds.push_back({Edge(map.foot, other), false});
            choice.alternatives.push_back(std::move(ds));
        }
        if (! choice.alternatives.empty())
            seeds.push_back(std::move(choice));
    }
    return seeds;
}

Propagator orientation_propagator(const EvenGadgetMap & map)
{
    return [map](const PartialCompletion & pc) {
        auto r = propagate_orientations(map, pc);
        Propagation p;
        p.contradiction = r.contradiction.has_value();
        p.implied = std::move(r.implied);
        return p;
    };
}

SolveOptions even_solve_options(const EvenGadgetMap & map, std::uint64_t budget)
{
    SolveOptions o;
    o.budget = budget;
    o.seeds = orientation_seeds(map);
    o.propagator = orientation_propagator(map);
    return o;
}

} // namespace sandwich
