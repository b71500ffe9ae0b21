#include "swarmcheck/smv.hpp"

#include "swarmcheck/relative.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace swarmcheck {

namespace {

const char *kDirName[4] = {"n", "e", "s", "w"};

std::string itos(std::uint64_t v) { return std::to_string(v); }

struct Writer {
    std::string out;

    void line(const std::string &s = "") {
        out += s;
        out += '\n';
    }
};

// Symbolic torus arithmetic on coordinate variables.
std::string plus_mod(const std::string &v, int delta, int m) {
    delta = ((delta % m) + m) % m;
    if (delta == 0)
        return v;
    return "((" + v + " + " + itos(static_cast<std::uint64_t>(delta)) + ") mod " + itos(static_cast<std::uint64_t>(m)) + ")";
}

std::string m_minus(const std::string &v, int m) {
    return "((" + itos(static_cast<std::uint64_t>(m)) + " - " + v + ") mod " + itos(static_cast<std::uint64_t>(m)) + ")";
}

struct CellExpr {
    std::string x, y;
};

// The affine map of a frame transform, as expression text over (x, y).
CellExpr transform_cell_expr(const FrameTransform &t, std::string x, std::string y, int m) {
    switch (t.rot & 3) {
    case 0: break;
    case 1: {
        std::string nx = m_minus(y, m);
        y = x;
        x = nx;
        break;
    }
    case 2:
        x = m_minus(x, m);
        y = m_minus(y, m);
        break;
    case 3: {
        std::string nx = y;
        y = m_minus(x, m);
        x = nx;
        break;
    }
    }
    return {plus_mod(x, t.dx, m), plus_mod(y, t.dy, m)};
}

Dir transform_dir_value(const FrameTransform &t, Dir d) {
    return static_cast<Dir>((static_cast<int>(d) + 3 * t.rot) & 3);
}

struct Emitter {
    const ModelParams &p;
    const Property &prop;
    Writer w;
    bool legacy;
    bool relative;

    Emitter(const ModelParams &params, const Property &property)
        : p(params), prop(property), legacy(params.abstraction == Abstraction::legacy),
          relative(params.encoding == Encoding::relative) {}

    bool has_pose(int i) const { return !(relative && i == 0); }

    std::string x(int i) const { return has_pose(i) ? "x" + itos(static_cast<std::uint64_t>(i)) : "0"; }
    std::string y(int i) const { return has_pose(i) ? "y" + itos(static_cast<std::uint64_t>(i)) : "0"; }
    std::string dir(int i) const { return "dir" + itos(static_cast<std::uint64_t>(i)); }
    std::string motion(int i) const { return "motion" + itos(static_cast<std::uint64_t>(i)); }
    std::string lnc(int i) const { return "last_num_con" + itos(static_cast<std::uint64_t>(i)); }
    std::string rob(int i) const { return "rob" + itos(static_cast<std::uint64_t>(i)); }
    std::string num_con(int i) const { return "num_con_" + itos(static_cast<std::uint64_t>(i)); }

    std::string act(int i) const {
        switch (p.mode) {
        case Mode::strict:
        case Mode::nonstrict: return "turn = " + itos(static_cast<std::uint64_t>(i));
        case Mode::fair:
            return (legacy ? "mover = " : "selector = ") + itos(static_cast<std::uint64_t>(i));
        case Mode::sync: return "TRUE";
        }
        return "TRUE";
    }

    std::string con(int i, int j) const {
        if (i > j)
            std::swap(i, j);
        return "con_" + itos(static_cast<std::uint64_t>(i)) + "_" + itos(static_cast<std::uint64_t>(j));
    }

    // ---- header ------------------------------------------------------

    void header() {
        w.line("-- alpha swarm navigation model");
        std::ostringstream os;
        os << "-- params: abstraction=" << to_string(p.abstraction)
           << " encoding=" << to_string(p.encoding) << " mode=" << to_string(p.mode)
           << " m=" << p.m << " r=" << p.r << " alpha=" << p.alpha << " range=" << p.range
           << " metric=" << to_string(p.metric) << " init=";
        switch (p.init.kind) {
        case InitialConstraint::Kind::all: os << "all"; break;
        case InitialConstraint::Kind::connected: os << "connected"; break;
        case InitialConstraint::Kind::explicit_list:
            os << "explicit[" << p.init.states.size() << "]";
            break;
        }
        w.line(os.str());
        w.line("-- property: " + to_string(prop));
        if (relative)
            w.line("-- robot 0 is the reference: pinned to cell (0,0) facing n;"
                   " other robots store reference-frame coordinates");
        w.line();
    }

    // ---- robot module --------------------------------------------------

    void robot_module() {
        if (legacy) {
            w.line("MODULE alpha_robot(act, motion, num_con, alpha)");
            w.line("-- connectivity-maintenance decision predicates");
            w.line("DEFINE");
            w.line("  lost := act & motion = forward & num_con < alpha;");
            w.line("  regained := act & motion = searching & num_con >= alpha;");
            w.line("  walking := act & !lost & !regained;");
        } else {
            w.line("MODULE alpha_robot(act, last_num_con, num_con, alpha)");
            w.line("-- event detection against the remembered neighbour count");
            w.line("DEFINE");
            w.line("  lost := act & num_con < last_num_con & num_con < alpha;");
            w.line("  regained := act & num_con > last_num_con;");
            w.line("  steady := act & !lost & !regained;");
        }
        w.line();
    }

    // ---- variable declarations -----------------------------------------

    void variables() {
        w.line("MODULE main");
        w.line("VAR");
        if (p.mode == Mode::strict || p.mode == Mode::nonstrict)
            w.line("  turn : 0.." + itos(static_cast<std::uint64_t>(p.r - 1)) + ";");
        if (p.mode == Mode::nonstrict)
            w.line("  remaining : 1.." + itos((1ull << p.r) - 1) + ";");
        if (p.mode == Mode::fair && !legacy)
            w.line("  selector : 0.." + itos(static_cast<std::uint64_t>(p.r - 1)) + ";");
        if (legacy && relative)
            w.line("  random : 0..1;");
        if (!legacy) {
            w.line("  random_turn : 0..2;");
            w.line("  random_move : 0..1;");
        }
        for (int i = 0; i < p.r; ++i) {
            if (has_pose(i)) {
                std::string coord = " : 0.." + itos(static_cast<std::uint64_t>(p.m - 1)) + ";";
                w.line("  " + x(i) + coord);
                w.line("  " + y(i) + coord);
                w.line("  " + dir(i) + " : {n, e, s, w};");
            }
            if (legacy)
                w.line("  " + motion(i) + " : {forward, searching};");
            else
                w.line("  " + lnc(i) + " : 0.." + itos(static_cast<std::uint64_t>(p.r - 1)) + ";");
        }
        for (int i = 0; i < p.r; ++i) {
            std::string var = legacy ? motion(i) : lnc(i);
            w.line("  " + rob(i) + " : alpha_robot(" + act(i) + ", " + var + ", " + num_con(i) +
                   ", " + itos(static_cast<std::uint64_t>(p.alpha)) + ");");
        }
        if (p.mode == Mode::fair && legacy) {
            w.line("IVAR");
            w.line("  mover : 0.." + itos(static_cast<std::uint64_t>(p.r - 1)) + ";");
        }
        w.line();
    }

    // ---- connectivity defines -------------------------------------------

    void connectivity() {
        w.line("DEFINE");
        for (int i = 0; i < p.r; ++i)
            for (int j = i + 1; j < p.r; ++j)
                pair_defines(i, j);
        for (int i = 0; i < p.r; ++i) {
            std::string args;
            for (int j = 0; j < p.r; ++j) {
                if (j == i)
                    continue;
                if (!args.empty())
                    args += ", ";
                args += con(i, j);
            }
            if (p.r == 1)
                w.line("  " + num_con(i) + " := 0;");
            else if (p.r == 2)
                w.line("  " + num_con(i) + " := toint(" + args + ");");
            else
                w.line("  " + num_con(i) + " := count(" + args + ");");
        }
        flood_defines();
        collision_define();
        w.line();
    }

    void pair_defines(int i, int j) {
        std::string tag = itos(static_cast<std::uint64_t>(i)) + "_" + itos(static_cast<std::uint64_t>(j));
        auto axis = [&](const std::string &name, const std::string &a, const std::string &b) {
            std::string raw = "d" + name + "_" + tag;
            std::string wrapped = "w" + name + "_" + tag;
            if (a == "0") {
                w.line("  " + raw + " := " + b + ";");
            } else {
                w.line("  " + raw + " := case " + a + " >= " + b + " : " + a + " - " + b +
                       "; TRUE : " + b + " - " + a + "; esac;");
            }
            w.line("  " + wrapped + " := case " + raw + " <= " + itos(static_cast<std::uint64_t>(p.m)) +
                   " - " + raw + " : " + raw + "; TRUE : " + itos(static_cast<std::uint64_t>(p.m)) +
                   " - " + raw + "; esac;");
        };
        axis("x", x(i), x(j));
        axis("y", y(i), y(j));
        std::string wx = "wx_" + tag;
        std::string wy = "wy_" + tag;
        std::string range = itos(static_cast<std::uint64_t>(p.range));
        switch (p.metric) {
        case Metric::chebyshev:
            w.line("  dist_" + tag + " := case " + wx + " >= " + wy + " : " + wx + "; TRUE : " +
                   wy + "; esac;");
            w.line("  con_" + tag + " := dist_" + tag + " <= " + range + ";");
            break;
        case Metric::manhattan:
            w.line("  con_" + tag + " := " + wx + " + " + wy + " <= " + range + ";");
            break;
        case Metric::euclidean:
            w.line("  con_" + tag + " := " + wx + " * " + wx + " + " + wy + " * " + wy +
                   " <= " + itos(static_cast<std::uint64_t>(p.range) * static_cast<std::uint64_t>(p.range)) + ";");
            break;
        }
    }

    void flood_defines() {
        if (p.r == 1) {
            w.line("  all_connected := TRUE;");
            return;
        }
        // Connected-to-robot-0 flood, one layer per extra hop.
        for (int j = 0; j < p.r; ++j)
            w.line("  conn1_" + itos(static_cast<std::uint64_t>(j)) +
                   (j == 0 ? std::string(" := TRUE;") : " := " + con(0, j) + ";"));
        for (int t = 2; t < p.r; ++t)
            for (int j = 0; j < p.r; ++j) {
                std::string prev = "conn" + itos(static_cast<std::uint64_t>(t - 1)) + "_";
                std::string expr = prev + itos(static_cast<std::uint64_t>(j));
                for (int k = 0; k < p.r; ++k)
                    if (k != j)
                        expr += " | (" + prev + itos(static_cast<std::uint64_t>(k)) + " & " + con(k, j) + ")";
                w.line("  conn" + itos(static_cast<std::uint64_t>(t)) + "_" + itos(static_cast<std::uint64_t>(j)) +
                       " := " + expr + ";");
            }
        std::string last = "conn" + itos(static_cast<std::uint64_t>(std::max(1, p.r - 1))) + "_";
        std::string all = last + "0";
        for (int j = 1; j < p.r; ++j)
            all += " & " + last + itos(static_cast<std::uint64_t>(j));
        w.line("  all_connected := " + all + ";");
    }

    void collision_define() {
        if (p.r == 1) {
            w.line("  collision_free := TRUE;");
            return;
        }
        std::string expr;
        for (int i = 0; i < p.r; ++i)
            for (int j = i + 1; j < p.r; ++j) {
                if (!expr.empty())
                    expr += " & ";
                expr += "!(" + x(i) + " = " + x(j) + " & " + y(i) + " = " + y(j) + ")";
            }
        w.line("  collision_free := " + expr + ";");
    }

    // ---- scheduler ------------------------------------------------------

    void scheduler() {
        if (p.mode == Mode::strict) {
            w.line("ASSIGN");
            w.line("  init(turn) := 0;");
            w.line("  next(turn) := (turn + 1) mod " + itos(static_cast<std::uint64_t>(p.r)) + ";");
        } else if (p.mode == Mode::nonstrict) {
            std::uint64_t full = (1ull << p.r) - 1;
            std::string invar;
            for (int i = 0; i < p.r; ++i) {
                if (!invar.empty())
                    invar += " & ";
                invar += "(turn = " + itos(static_cast<std::uint64_t>(i)) + " -> (remaining / " +
                         itos(1ull << i) + ") mod 2 = 1)";
            }
            w.line("INVAR " + invar + ";");
            w.line("ASSIGN");
            w.line("  init(remaining) := " + itos(full) + ";");
            w.line("  next(remaining) := case");
            for (int i = 0; i < p.r; ++i) {
                std::string bit = itos(1ull << i);
                w.line("    turn = " + itos(static_cast<std::uint64_t>(i)) + " & remaining = " + bit +
                       " : " + itos(full) + ";");
                w.line("    turn = " + itos(static_cast<std::uint64_t>(i)) + " : remaining - " + bit + ";");
            }
            w.line("    TRUE : remaining;");
            w.line("  esac;");
        } else {
            w.line("ASSIGN");
        }
    }

    // ---- variable updates ------------------------------------------------

    struct CaseRow {
        std::string guard;
        std::string value;
    };

    void emit_case(const std::string &target, const std::vector<CaseRow> &rows,
                   const std::string &fallback) {
        w.line("  next(" + target + ") := case");
        for (const CaseRow &row : rows)
            w.line("    " + row.guard + " : " + row.value + ";");
        w.line("    TRUE : " + fallback + ";");
        w.line("  esac;");
    }

    // Reference branch descriptors (relative encoding): guard + the frame
    // transform applied to every other robot.
    struct RefCase {
        std::string guard;
        FrameTransform t;
    };

    std::vector<RefCase> legacy_ref_cases() const {
        std::vector<RefCase> cases;
        std::string ref = rob(0);
        // 180-degree recovery turn.
        cases.push_back({ref + ".lost", transform_fixing({0, 0, Dir::s}, p.m)});
        // Random quarter turn on regaining connectivity.
        cases.push_back({ref + ".regained & random = 0", transform_fixing({0, 0, Dir::w}, p.m)});
        cases.push_back({ref + ".regained & random = 1", transform_fixing({0, 0, Dir::e}, p.m)});
        // Forward step: the swarm shifts one cell south.
        cases.push_back({ref + ".walking", transform_fixing(step_cell({0, 0, Dir::n}, p.m), p.m)});
        return cases;
    }

    std::vector<RefCase> counting_ref_cases() const {
        std::vector<RefCase> cases;
        std::string ref = rob(0);
        struct Orient {
            std::string guard;
            Dir heading;
        };
        std::vector<Orient> orients = {
            {ref + ".steady", Dir::n},
            {ref + ".lost | (" + ref + ".regained & random_turn = 2)", Dir::s},
            {ref + ".regained & random_turn = 0", Dir::w},
            {ref + ".regained & random_turn = 1", Dir::e},
        };
        for (const Orient &o : orients) {
            Pose target = step_cell({0, 0, o.heading}, p.m);
            std::string blocked;
            for (int j = 1; j < p.r; ++j) {
                if (!blocked.empty())
                    blocked += " | ";
                blocked += "(" + x(j) + " = " + itos(static_cast<std::uint64_t>(target.x)) + " & " + y(j) +
                           " = " + itos(static_cast<std::uint64_t>(target.y)) + ")";
            }
            if (blocked.empty())
                blocked = "FALSE";
            cases.push_back({"(" + o.guard + ") & !(" + blocked + ")",
                             transform_fixing({target.x, target.y, o.heading}, p.m)});
            cases.push_back({"(" + o.guard + ") & (" + blocked + ") & random_move = 0",
                             transform_fixing({0, 0, rotate_dir(o.heading, Turn::left)}, p.m)});
            cases.push_back({"(" + o.guard + ") & (" + blocked + ") & random_move = 1",
                             transform_fixing({0, 0, rotate_dir(o.heading, Turn::right)}, p.m)});
        }
        return cases;
    }

    std::vector<RefCase> ref_cases() const {
        if (!relative)
            return {};
        return legacy ? legacy_ref_cases() : counting_ref_cases();
    }

    void legacy_updates() {
        std::vector<RefCase> refc = ref_cases();
        for (int i = relative ? 1 : 0; i < p.r; ++i) {
            std::vector<CaseRow> xr, yr, dr;
            for (const RefCase &rc : refc) {
                CellExpr cell = transform_cell_expr(rc.t, x(i), y(i), p.m);
                if (cell.x != x(i))
                    xr.push_back({rc.guard, cell.x});
                if (cell.y != y(i))
                    yr.push_back({rc.guard, cell.y});
                if (rc.t.rot != 0)
                    for (int d = 0; d < 4; ++d)
                        dr.push_back({rc.guard + " & " + dir(i) + " = " + kDirName[d],
                                      kDirName[static_cast<int>(
                                          transform_dir_value(rc.t, static_cast<Dir>(d)))]});
            }
            std::string me = rob(i);
            xr.push_back({me + ".walking & " + dir(i) + " = e", plus_mod(x(i), 1, p.m)});
            xr.push_back({me + ".walking & " + dir(i) + " = w", plus_mod(x(i), -1, p.m)});
            yr.push_back({me + ".walking & " + dir(i) + " = n", plus_mod(y(i), 1, p.m)});
            yr.push_back({me + ".walking & " + dir(i) + " = s", plus_mod(y(i), -1, p.m)});
            for (int d = 0; d < 4; ++d)
                dr.push_back({me + ".lost & " + dir(i) + " = " + kDirName[d],
                              kDirName[static_cast<int>(rotate_dir(static_cast<Dir>(d), Turn::back))]});
            for (int d = 0; d < 4; ++d) {
                Dir left = rotate_dir(static_cast<Dir>(d), Turn::left);
                Dir right = rotate_dir(static_cast<Dir>(d), Turn::right);
                if (relative) {
                    dr.push_back({me + ".regained & random = 0 & " + dir(i) + " = " + kDirName[d],
                                  kDirName[static_cast<int>(left)]});
                    dr.push_back({me + ".regained & random = 1 & " + dir(i) + " = " + kDirName[d],
                                  kDirName[static_cast<int>(right)]});
                } else {
                    dr.push_back({me + ".regained & " + dir(i) + " = " + kDirName[d],
                                  std::string("{") + kDirName[static_cast<int>(left)] + ", " +
                                      kDirName[static_cast<int>(right)] + "}"});
                }
            }
            emit_case(x(i), xr, x(i));
            emit_case(y(i), yr, y(i));
            emit_case(dir(i), dr, dir(i));
        }
        for (int i = 0; i < p.r; ++i) {
            w.line("  init(" + motion(i) + ") := forward;");
            emit_case(motion(i),
                      {{rob(i) + ".lost", "searching"}, {rob(i) + ".regained", "forward"}},
                      motion(i));
        }
    }

    void counting_defines() {
        w.line("DEFINE");
        for (int i = relative ? 1 : 0; i < p.r; ++i) {
            std::string me = rob(i);
            std::string idx = itos(static_cast<std::uint64_t>(i));
            // Heading after the orientation phase.
            w.line("  odir_" + idx + " := case");
            for (int d = 0; d < 4; ++d)
                w.line("    " + me + ".lost & " + dir(i) + " = " + kDirName[d] + " : " +
                       kDirName[static_cast<int>(rotate_dir(static_cast<Dir>(d), Turn::back))] + ";");
            for (int rt = 0; rt < 3; ++rt) {
                Turn t = std::array{Turn::left, Turn::right, Turn::back}[static_cast<std::size_t>(rt)];
                for (int d = 0; d < 4; ++d)
                    w.line("    " + me + ".regained & random_turn = " + itos(static_cast<std::uint64_t>(rt)) +
                           " & " + dir(i) + " = " + kDirName[d] + " : " +
                           kDirName[static_cast<int>(rotate_dir(static_cast<Dir>(d), t))] + ";");
            }
            w.line("    TRUE : " + dir(i) + ";");
            w.line("  esac;");
            w.line("  tx_" + idx + " := case odir_" + idx + " = e : " + plus_mod(x(i), 1, p.m) +
                   "; odir_" + idx + " = w : " + plus_mod(x(i), -1, p.m) + "; TRUE : " + x(i) + "; esac;");
            w.line("  ty_" + idx + " := case odir_" + idx + " = n : " + plus_mod(y(i), 1, p.m) +
                   "; odir_" + idx + " = s : " + plus_mod(y(i), -1, p.m) + "; TRUE : " + y(i) + "; esac;");
            std::string blocked;
            for (int j = 0; j < p.r; ++j) {
                if (j == i)
                    continue;
                if (!blocked.empty())
                    blocked += " | ";
                blocked += "(tx_" + idx + " = " + x(j) + " & ty_" + idx + " = " + y(j) + ")";
            }
            w.line("  blocked_" + idx + " := " + (blocked.empty() ? "FALSE" : blocked) + ";");
        }
        w.line();
    }

    void counting_updates() {
        std::vector<RefCase> refc = ref_cases();
        for (int i = relative ? 1 : 0; i < p.r; ++i) {
            std::string idx = itos(static_cast<std::uint64_t>(i));
            std::vector<CaseRow> xr, yr, dr;
            for (const RefCase &rc : refc) {
                CellExpr cell = transform_cell_expr(rc.t, x(i), y(i), p.m);
                if (cell.x != x(i))
                    xr.push_back({rc.guard, cell.x});
                if (cell.y != y(i))
                    yr.push_back({rc.guard, cell.y});
                if (rc.t.rot != 0)
                    for (int d = 0; d < 4; ++d)
                        dr.push_back({rc.guard + " & " + dir(i) + " = " + kDirName[d],
                                      kDirName[static_cast<int>(
                                          transform_dir_value(rc.t, static_cast<Dir>(d)))]});
            }
            std::string moves = act(i) + " & !blocked_" + idx;
            std::string stuck = act(i) + " & blocked_" + idx;
            xr.push_back({moves, "tx_" + idx});
            yr.push_back({moves, "ty_" + idx});
            dr.push_back({moves, "odir_" + idx});
            for (int d = 0; d < 4; ++d) {
                dr.push_back({stuck + " & random_move = 0 & odir_" + idx + " = " + kDirName[d],
                              kDirName[static_cast<int>(rotate_dir(static_cast<Dir>(d), Turn::left))]});
                dr.push_back({stuck + " & random_move = 1 & odir_" + idx + " = " + kDirName[d],
                              kDirName[static_cast<int>(rotate_dir(static_cast<Dir>(d), Turn::right))]});
            }
            emit_case(x(i), xr, x(i));
            emit_case(y(i), yr, y(i));
            emit_case(dir(i), dr, dir(i));
        }
        for (int i = 0; i < p.r; ++i) {
            w.line("  init(" + lnc(i) + ") := " + num_con(i) + ";");
            emit_case(lnc(i), {{act(i), num_con(i)}}, lnc(i));
        }
    }

    void initial_constraints() {
        std::vector<std::string> clauses;
        if (!legacy)
            clauses.push_back("collision_free");
        if (p.init.kind == InitialConstraint::Kind::connected)
            clauses.push_back("all_connected");
        if (p.init.kind == InitialConstraint::Kind::explicit_list) {
            std::string any;
            for (const SwarmState &given : p.init.states) {
                SwarmState s = given;
                if (relative)
                    s = canonicalize(s, p.m, p.r).base;
                std::vector<std::string> terms;
                for (int i = 0; i < p.r; ++i) {
                    const RobotState &rs = s.robots[static_cast<std::size_t>(i)];
                    if (has_pose(i)) {
                        terms.push_back(x(i) + " = " + itos(static_cast<std::uint64_t>(rs.pose.x)));
                        terms.push_back(y(i) + " = " + itos(static_cast<std::uint64_t>(rs.pose.y)));
                        terms.push_back(dir(i) + std::string(" = ") + kDirName[static_cast<int>(rs.pose.dir)]);
                    }
                    if (legacy)
                        terms.push_back(motion(i) + std::string(" = ") +
                                        (rs.motion == kMotionForward ? "forward" : "searching"));
                }
                std::string conj;
                for (const std::string &term : terms)
                    conj += (conj.empty() ? "" : " & ") + term;
                if (!any.empty())
                    any += " | ";
                any += "(" + conj + ")";
            }
            clauses.push_back("(" + any + ")");
        }
        for (const std::string &c : clauses)
            w.line("INIT " + c + ";");
    }

    void property_clause() {
        std::string atom;
        switch (prop.atom) {
        case Atom::all_connected: atom = "all_connected"; break;
        case Atom::collision_free: atom = "collision_free"; break;
        case Atom::pairwise: atom = con(prop.i, prop.j); break;
        }
        if (prop.negated)
            atom = "!" + atom;
        std::string shaped;
        switch (prop.shape) {
        case TemporalShape::eventually: shaped = "F (" + atom + ")"; break;
        case TemporalShape::always: shaped = "G (" + atom + ")"; break;
        case TemporalShape::repeatedly: shaped = "G F (" + atom + ")"; break;
        case TemporalShape::eventually_always: shaped = "F G (" + atom + ")"; break;
        }
        if (p.mode == Mode::fair) {
            std::string who = legacy ? "mover" : "selector";
            std::string premise;
            for (int i = 0; i < p.r; ++i) {
                if (!premise.empty())
                    premise += " & ";
                premise += "(G F " + who + " = " + itos(static_cast<std::uint64_t>(i)) + ")";
            }
            w.line("LTLSPEC (" + premise + ") -> (" + shaped + ")");
        } else {
            w.line("LTLSPEC " + shaped);
        }
    }

    std::string emit() {
        header();
        robot_module();
        variables();
        connectivity();
        if (!legacy)
            counting_defines();
        scheduler();
        if (legacy)
            legacy_updates();
        else
            counting_updates();
        initial_constraints();
        property_clause();
        return std::move(w.out);
    }
};

} // namespace

std::string emit_smv(const ModelParams &params, const Property &prop) {
    params.validate();
    if (params.mode == Mode::sync && params.abstraction == Abstraction::counting)
        throw SmvUnsupported("unsupported combination: sync mode with the new abstraction");
    if (params.mode == Mode::sync && params.encoding == Encoding::relative)
        throw SmvUnsupported("unsupported combination: sync mode with the relative encoding");
    Emitter emitter(params, prop);
    return emitter.emit();
}

std::string emit_smv(const ModelParams &params) {
    return emit_smv(params, Property{});
}

namespace {

std::string trim(const std::string &s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool starts_section(const std::string &t) {
    static const char *kKeywords[] = {"MODULE",  "DEFINE", "ASSIGN",   "TRANS",   "INIT",
                                      "INVAR",   "LTLSPEC", "JUSTICE", "FAIRNESS", "SPEC",
                                      "CTLSPEC", "VAR",    "IVAR",     "FROZENVAR"};
    for (const char *kw : kKeywords) {
        std::size_t n = std::string(kw).size();
        if (t.compare(0, n, kw) == 0 && (t.size() == n || !std::isalnum(static_cast<unsigned char>(t[n]))))
            return true;
    }
    return false;
}

} // namespace

std::vector<DomainVar> parse_domains(const std::string &text) {
    std::vector<DomainVar> vars;
    enum class Section { none, var, ivar, other };
    Section section = Section::none;
    bool saw_module = false;
    int line_no = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string t = trim(raw);
        if (t.empty() || t.rfind("--", 0) == 0)
            continue;
        if (starts_section(t)) {
            if (t.rfind("MODULE", 0) == 0) {
                saw_module = true;
                section = Section::none;
            } else if (t == "VAR") {
                section = Section::var;
            } else if (t == "IVAR") {
                section = Section::ivar;
            } else {
                section = Section::other;
            }
            continue;
        }
        if (section != Section::var)
            continue;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos || t.back() != ';')
            throw SmvParseError(line_no, "malformed variable declaration");
        std::string name = trim(t.substr(0, colon));
        std::string type = trim(t.substr(colon + 1, t.size() - colon - 2));
        if (name.empty() || type.empty())
            throw SmvParseError(line_no, "malformed variable declaration");
        if (type.find('(') != std::string::npos)
            continue; // module instance
        if (type == "boolean") {
            vars.push_back({name, 2});
            continue;
        }
        if (type.front() == '{') {
            if (type.back() != '}')
                throw SmvParseError(line_no, "unterminated enumeration");
            std::uint64_t values = 1;
            for (char c : type)
                if (c == ',')
                    ++values;
            vars.push_back({name, values});
            continue;
        }
        std::size_t dots = type.find("..");
        if (dots == std::string::npos)
            throw SmvParseError(line_no, "unsupported variable type: " + type);
        try {
            long lo = std::stol(type.substr(0, dots));
            long hi = std::stol(type.substr(dots + 2));
            if (hi < lo)
                throw SmvParseError(line_no, "empty range");
            vars.push_back({name, static_cast<std::uint64_t>(hi - lo + 1)});
        } catch (const std::invalid_argument &) {
            throw SmvParseError(line_no, "malformed range bounds: " + type);
        }
    }
    if (!saw_module)
        throw SmvParseError(line_no, "no module found");
    return vars;
}

std::uint64_t domain_product(const std::vector<DomainVar> &vars) {
    std::uint64_t total = 1;
    for (const DomainVar &var : vars) {
        if (var.size == 0 || total > ~0ull / var.size)
            throw ConfigError("domain product exceeds 2^64");
        total *= var.size;
    }
    return total;
}

} // namespace swarmcheck
