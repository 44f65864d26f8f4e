#include "conormal/report.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <iomanip>
#include <sstream>

namespace conormal {

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
    std::ostringstream o;
    for (unsigned int i = 0; i < len; ++i) o << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return o.str();
}

namespace detail {

inline Json strings_of(const std::vector<Polynomial>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

inline Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j).to_string());
        rows.push_back(r);
    }
    return rows;
}

inline Json height_json(int h) {
    if (h == kInfiniteHeight) return "inf";
    return h;
}

inline Json long_json(long v) {
    if (v == kInfiniteHeight) return "inf";
    return v;
}

inline Json hf_json(const std::map<int, long>& hf) {
    Json o = Json::object();
    for (const auto& [d, v] : hf) o[std::to_string(d)] = v;
    return o;
}

inline Json criterion_json(const CriterionReport& r) {
    Json j;
    j["criterion"] = r.criterion;
    j["verdict"] = r.conclusion;
    j["outcome"] = verdict_name(r.verdict);
    j["assumptions"] = r.assumptions;
    Json ev = Json::array();
    for (const auto& e : r.evidence) {
        Json row;
        row["quantity"] = e.quantity;
        row["index"] = e.index;
        row["computed"] = long_json(e.computed);
        row["required"] = long_json(e.required);
        row["pass"] = e.pass;
        ev.push_back(row);
    }
    j["evidence"] = ev;
    Json w = Json::object();
    for (const auto& [k, v] : r.witnesses) w[k] = v;
    j["witnesses"] = w;
    j["notes"] = r.notes;
    return j;
}

inline Json algebra_json(const GradedAlgebra& A) {
    Json j;
    j["ring"] = A.ring->names();
    j["presentation_variables"] = A.xnames;
    j["defining_ideal"] = strings_of(gb_ideal(A.defining).generators());
    return j;
}

inline Json module_summary(const FPModule& M) {
    Json j;
    j["generators"] = M.ngens();
    j["relations"] = M.presentation().cols();
    j["nu"] = minimal_generators(M);
    j["degrees"] = M.degrees();
    return j;
}

/// Executes a parsed session, keeping named results for later commands.
class SessionRunner {
public:
    SessionRunner(const SessionFile& s, RunOptions opt) : s_(s), opt_(std::move(opt)) {
        max_degree_ = opt_.max_degree.value_or(s.max_degree.value_or(kDefaultMaxDegree));
        seed_ = opt_.seed.value_or(s.seed.value_or(0));
        if (s.ring) {
            const RingDecl& d = *s.ring;
            ring_ = ring_create(d.vars, parse_field(d.field, {}), parse_order(d.order, {}));
        }
        for (const auto& d : s.ideals) ideals_.emplace(d.name, Ideal(ring_, parse_list(ring_, d.gens)));
        for (const auto& d : s.matrices) {
            std::vector<std::vector<Polynomial>> rows;
            for (const auto& r : d.rows) rows.push_back(parse_list(ring_, r));
            Matrix m = rows.empty() ? Matrix(ring_, 0, 0) : Matrix::from_rows(ring_, rows);
            matrices_.emplace(d.name, m);
        }
    }

    int max_degree() const { return max_degree_; }
    unsigned seed() const { return seed_; }

    Json run(const CommandDecl& c, bool& failed) {
        const std::string& op = c.op;
        Json r;
        auto crit = [&](const CriterionReport& rep) {
            if (rep.verdict == Verdict::fails) failed = true;
            return criterion_json(rep);
        };
        if (op == "gb") {
            const Ideal& I = ideal(c.args[0]);
            GroebnerBasis gb = I.gb();
            r["generators"] = strings_of(gb.generators());
            Json lm = Json::array();
            for (const auto& m : gb.leading_monomials()) lm.push_back(format_monomial(*I.ring(), m));
            r["leading_monomials"] = lm;
            store(c, Ideal(I.ring(), gb.generators()));
        } else if (op == "dim") {
            const Ideal& I = ideal(c.args[0]);
            if (I.is_unit()) {
                r["dim"] = -1;
                r["height"] = "inf";
            } else {
                DimHeight dh = dimension_and_height(I);
                r["dim"] = dh.dim;
                r["height"] = dh.height;
            }
        } else if (op == "fitting") {
            r = fitting(c);
        } else if (op == "resolve") {
            Matrix pres = is_matrix(c.args[0]) ? matrices_.at(c.args[0])
                                               : Matrix::row(ideal(c.args[0]).ring(), ideal(c.args[0]).generators());
            FreeResolution F = minimal_free_resolution(pres);
            r["length"] = F.length();
            r["betti"] = F.betti();
            Json tw = Json::array();
            for (int i = 0; i <= F.length(); ++i) tw.push_back(F.twists(i));
            r["twists"] = tw;
        } else if (op == "conormal") {
            FPModule E = present_conormal(ideal(c.args[0]));
            r = module_summary(E);
            r["presentation"] = matrix_json(E.presentation());
            const Ideal& p = ideal(c.args[0]);
            std::optional<Matrix> emb = p.is_unit() ? std::nullopt : rank_embedding(E, height(p));
            if (emb) {
                FPModule embedded(E.base(), E.presentation(), *emb);
                MFullResult mf = m_full_test(embedded, default_mfull_candidates(E.ring(), seed_));
                r["m_full_witness"] = mf.witness ? mf.witness->to_string() : "none";
                r["m_full_candidates_tried"] = mf.tried;
            } else {
                r["m_full_witness"] = "no rank embedding";
            }
        } else if (op == "bidual") {
            FPModule E = present_conormal(ideal(c.args[0]));
            BidualResult b = bidual_and_compare(E);
            r["nu(E)"] = minimal_generators(E);
            r["nu(E**)"] = minimal_generators(b.bidual);
            r["reflexive"] = b.is_reflexive();
            r["evaluation_injective"] = b.injective;
            r["evaluation_surjective"] = b.surjective;
            r["nu(defect)"] = minimal_generators(b.defect);
            if (!b.is_reflexive()) {
                try {
                    r["defect_hilbert_function"] = hf_json(hilbert_function_finite(b.defect));
                } catch (const Error&) {
                    r["defect_hilbert_function"] = "not finite length";
                }
            }
        } else if (op == "det") {
            r = det(c);
        } else if (op == "rees" || op == "assoc-graded") {
            const Ideal& I = ideal(c.args[0]);
            GradedAlgebra A = op == "rees" ? rees_of_ideal(I) : associated_graded(I);
            r = algebra_json(A);
            store(c, A.defining);
        } else if (op == "component") {
            int t = std::stoi(c.args[0]);
            GradedAlgebra G = associated_graded(ideal(c.args[1]));
            FPModule C = graded_component(G, t, max_degree_);
            r["component"] = t;
            Json m = module_summary(C);
            for (auto it = m.begin(); it != m.end(); ++it) r[it.key()] = it.value();
            if (c.args.size() > 2) {
                BidualResult b = bidual_and_compare(C);
                r["nu_bidual"] = minimal_generators(b.bidual);
                r["reflexive"] = b.is_reflexive();
            }
        } else if (op == "linear-type") {
            r["linear_type"] = linear_type_check(ideal(c.args[0]));
        } else if (op == "spread") {
            r["analytic_spread"] = analytic_spread(ideal(c.args[0]));
        } else if (op == "domain-criterion") {
            r = crit(domain_criterion(ideal(c.args[0])));
        } else if (op == "normality-criterion") {
            r = crit(normality_criterion(ideal(c.args[0])));
        } else if (op == "normal-locus") {
            r = crit(normal_locus_obstructions(ideal(c.args[0])));
        } else if (op == "closedness-pipeline") {
            r = crit(conormal_closedness_pipeline(ideal(c.args[0])));
        } else if (op == "nu2-check") {
            r = crit(nu2_defect_check(ideal(c.args[0]), max_degree_));
        } else if (op == "sliding-depth") {
            r = crit(sliding_depth_check(ideal(c.args[0])));
        } else if (op == "verify-closure") {
            r = verify(c, failed);
        } else {
            throw Error("unknown command '" + op + "'");
        }
        return r;
    }

private:
    bool is_matrix(const std::string& n) const { return matrices_.count(n) > 0; }

    const Ideal& ideal(const std::string& n) const {
        auto it = ideals_.find(n);
        if (it == ideals_.end()) throw Error("undefined ideal '" + n + "'");
        return it->second;
    }

    void store(const CommandDecl& c, Ideal I) {
        if (c.as_name) ideals_.insert_or_assign(*c.as_name, std::move(I));
    }

    Json fitting(const CommandDecl& c) {
        Json r;
        bool from_ideal = !is_matrix(c.args[0]);
        if (from_ideal && c.args.size() == 1) {
            HeightProfile prof = fitting_height_profile(ideal(c.args[0]));
            r["n"] = prof.n;
            r["height(p)"] = prof.g;
            r["dim R"] = prof.d;
            Json rows = Json::array();
            for (const auto& e : prof.entries) {
                Json row;
                row["t"] = e.t;
                row["minor_size"] = e.minor_size;
                row["height"] = height_json(e.height);
                row["bound"] = e.bound;
                row["pass"] = e.pass;
                rows.push_back(row);
            }
            r["profile"] = rows;
            r["all_pass"] = prof.all_pass();
            return r;
        }
        Matrix m = from_ideal ? syzygy_data(ideal(c.args[0])).phi : matrices_.at(c.args[0]);
        std::vector<int> sizes;
        if (c.args.size() > 1) sizes.push_back(std::stoi(c.args[1]));
        else
            for (int t = 1; t <= std::min(m.rows(), m.cols()); ++t) sizes.push_back(t);
        Json rows = Json::array();
        for (int t : sizes) {
            Ideal F = fitting_ideal(m, t);
            Json row;
            row["minor_size"] = t;
            row["generators"] = strings_of(gb_ideal(F).generators());
            row["height"] = F.is_unit() ? Json("inf") : Json(height(F));
            rows.push_back(row);
            if (sizes.size() == 1) store(c, F);
        }
        r["fitting_ideals"] = rows;
        return r;
    }

    Json det(const CommandDecl& c) {
        Json r;
        const Ideal& p = ideal(c.args[0]);
        std::optional<Matrix> emb;
        if (c.args.size() > 1) {
            emb = matrices_.at(c.args[1]);
            r["embedding_source"] = c.args[1];
        } else {
            FPModule E = present_conormal(p);
            emb = rank_embedding(E, height(p));
            r["embedding_source"] = "dual rows";
        }
        if (!emb) {
            r["determinant"] = "no rank embedding found";
            return r;
        }
        r["embedding"] = matrix_json(*emb);
        Ideal D = ideal_sum(determinant_ideal(*emb), p);
        r["determinant"] = strings_of(gb_ideal(D).generators());
        r["divisorial"] = is_divisorial(D, p);
        store(c, D);
        return r;
    }

    Json verify(const CommandDecl& c, bool& failed) {
        const ClosureDecl& d = *s_.find_closure(c.args[0]);
        GradedAlgebra G = associated_graded(ideal(d.over));
        ClosureCandidate cand = make_closure_candidate(G, d.new_vars, d.relations);
        std::optional<Ideal> named;
        if (d.expect_conductor) {
            if (*d.expect_conductor == "mG") named = irrelevant_extension(G);
            else {
                std::vector<Polynomial> lifted;
                for (const auto& f : ideal(*d.expect_conductor).generators()) lifted.push_back(remap_by_name(f, G.ring));
                named = Ideal(G.ring, lifted);
            }
        }
        ConductorResult res = verify_integral_closure_candidate(G, cand, named, d.expect_conductor.value_or(""));
        Json r;
        r["consistent"] = res.consistent;
        r["monic_present"] = res.monic_present;
        r["relations_in_ideal"] = res.relations_in_ideal;
        r["injective"] = res.injective;
        r["annihilates"] = res.annihilates;
        r["integral_over_G"] = res.consistent && res.monic_present && res.relations_in_ideal && res.injective;
        r["basis_size"] = res.basis_size;
        r["new_variable_degrees"] = cand.new_degrees;
        r["conductor"] = strings_of(gb_ideal(res.conductor).generators());
        r["conductor_degree_zero"] = strings_of(gb_ideal(res.degree_zero).generators());
        if (res.equals_named) {
            r["expected_conductor"] = res.named;
            r["conductor_equals_expected"] = *res.equals_named;
            r["conductor_relation"] = (*res.equals_named ? "= " : "!= ") + res.named;
            if (!*res.equals_named) failed = true;
        }
        store(c, res.conductor);
        return r;
    }

    const SessionFile& s_;
    RunOptions opt_;
    int max_degree_;
    unsigned seed_;
    RingPtr ring_;
    std::map<std::string, Ideal> ideals_;
    std::map<std::string, Matrix> matrices_;
};

inline std::string command_text(const CommandDecl& c) {
    std::string s = c.op;
    for (const auto& a : c.args) s += " " + a;
    if (c.as_name) s += " as " + *c.as_name;
    return s;
}

}  // namespace detail

ReportDocument run_session(const SessionFile& s, const std::string& source, const RunOptions& opt) {
    ReportDocument doc;
    Json& j = doc.json;
    j["schema"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["input_sha256"] = sha256_hex(source);
    detail::SessionRunner runner(s, opt);
    Json settings;
    settings["field"] = s.ring ? s.ring->field : "QQ";
    settings["seed"] = runner.seed();
    settings["max_degree"] = runner.max_degree();
    if (opt.step_limit) settings["step_limit"] = *opt.step_limit;
    j["settings"] = settings;
    std::optional<ScopedStepLimit> limit;
    if (opt.step_limit) limit.emplace(*opt.step_limit);
    Json results = Json::array();
    for (std::size_t i = 0; i < s.commands.size(); ++i) {
        const CommandDecl& c = s.commands[i];
        SourceLoc where = i < s.command_locs.size() ? s.command_locs[i] : SourceLoc{};
        Json entry;
        entry["command"] = detail::command_text(c);
        auto t0 = std::chrono::steady_clock::now();
        bool failed = false;
        try {
            entry["result"] = runner.run(c, failed);
        } catch (const LimitExceeded& e) {
            throw CommandLimitExceeded(e.what(), static_cast<int>(i), c.op, where);
        } catch (const CommandError&) {
            throw;
        } catch (const Error& e) {
            throw CommandError(e.what(), static_cast<int>(i), c.op, where);
        }
        entry["criterion_failed"] = failed;
        doc.criterion_failed = doc.criterion_failed || failed;
        if (opt.timing)
            entry["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(entry);
    }
    j["results"] = results;
    j["criterion_failed"] = doc.criterion_failed;
    return doc;
}

namespace detail {

inline std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
        return "[" + s + "]";
    }
    if (v.is_object()) {
        std::string s;
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            s += (first ? "" : ", ") + it.key() + ": " + scalar_text(it.value());
            first = false;
        }
        return "{" + s + "}";
    }
    return v.dump();
}

inline bool is_table(const Json& v) {
    if (!v.is_array() || v.empty()) return false;
    for (const auto& e : v)
        if (!e.is_object()) return false;
    return true;
}

inline void render_table(std::ostream& o, const Json& rows, const std::string& indent) {
    std::vector<std::string> cols;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) cols.push_back(it.key());
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        std::vector<std::string> line;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            std::string s = r.contains(cols[k]) ? scalar_text(r[cols[k]]) : "";
            width[k] = std::max(width[k], s.size());
            line.push_back(s);
        }
        cells.push_back(line);
    }
    auto emit = [&](const std::vector<std::string>& line) {
        o << indent;
        for (std::size_t k = 0; k < line.size(); ++k) {
            o << (k ? " | " : "") << line[k];
            if (k + 1 < line.size()) o << std::string(width[k] - line[k].size(), ' ');
        }
        o << "\n";
    };
    emit(cols);
    o << indent;
    for (std::size_t k = 0; k < cols.size(); ++k) o << (k ? "-+-" : "") << std::string(width[k], '-');
    o << "\n";
    for (const auto& line : cells) emit(line);
}

inline void render_object(std::ostream& o, const Json& obj, const std::string& indent) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const Json& v = it.value();
        if (is_table(v)) {
            o << indent << it.key() << ":\n";
            render_table(o, v, indent + "  ");
        } else if (v.is_object() && !v.empty() && v.size() > 3) {
            o << indent << it.key() << ":\n";
            render_object(o, v, indent + "  ");
        } else if (v.is_array() && !v.empty() && v[0].is_array()) {
            o << indent << it.key() << ":\n";
            for (const auto& row : v) o << indent << "  " << scalar_text(row) << "\n";
        } else {
            o << indent << it.key() << ": " << scalar_text(v) << "\n";
        }
    }
}

}  // namespace detail

std::string emit_report(const ReportDocument& doc, ReportFormat format) {
    if (format == ReportFormat::json) return doc.json.dump(2) + "\n";
    std::ostringstream o;
    const Json& j = doc.json;
    o << "conormal-lab " << detail::scalar_text(j.value("tool_version", Json(""))) << " (" << detail::scalar_text(j.value("schema", Json("")))
      << ")\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "schema" || it.key() == "tool_version" || it.key() == "results") continue;
        o << it.key() << ": " << detail::scalar_text(it.value()) << "\n";
    }
    if (j.contains("results")) {
        int k = 0;
        for (const auto& e : j["results"]) {
            o << "\n[" << ++k << "] run " << detail::scalar_text(e["command"]) << "\n";
            for (auto it = e.begin(); it != e.end(); ++it) {
                if (it.key() == "command" || it.key() == "result") continue;
                o << "  " << it.key() << ": " << detail::scalar_text(it.value()) << "\n";
            }
            if (e.contains("result")) detail::render_object(o, e["result"], "  ");
        }
    }
    return o.str();
}

ReportDocument empty_report() {
    ReportDocument doc;
    doc.json["schema"] = kSchemaVersion;
    doc.json["tool_version"] = kToolVersion;
    doc.json["results"] = Json::array();
    return doc;
}

}  // namespace conormal
