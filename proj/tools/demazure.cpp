#include "demazure/cone.hpp"
#include "demazure/faces.hpp"
#include "demazure/serialize.hpp"
#include "demazure/sweep.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace dmz;

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
    std::string type = "A";
    int rank = 2;
    std::string lambda;
    std::string word;
    std::string out;
    std::string format = "json";
    int jobs = 0;
    uint64_t cap_order = WeylGroup::kDefaultOrderCap;
    uint64_t seed = 20260811ull;
    std::string cache_dir;
};

IntWeight parse_lambda(const std::string& s, int rank) {
    IntWeight out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(Int(tok));
    if (int(out.size()) != rank) throw CLI::ValidationError("--lambda must have one coordinate per node");
    return out;
}

RatWeight parse_mu(const std::string& s, int rank) {
    RatWeight out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(rat_from_string(tok));
    if (int(out.size()) != rank) throw CLI::ValidationError("--mu must have one coordinate per node");
    return out;
}

void emit(const CommonArgs& args, const std::string& content) {
    if (args.out.empty()) {
        std::cout << content;
    } else {
        atomic_write(args.out, content);
    }
}

struct Session {
    std::unique_ptr<RootDatum> datum;
    std::unique_ptr<WeylGroup> group;
};

Session open_session(const CommonArgs& args) {
    if (args.type.size() != 1) throw CLI::ValidationError("--type expects a single letter A..G");
    Session s;
    s.datum = std::make_unique<RootDatum>(RootDatum::build(args.type[0], args.rank));
    s.group = std::make_unique<WeylGroup>(*s.datum, args.cap_order);
    if (args.jobs > 0) omp_set_num_threads(args.jobs);
    return s;
}

int checked_word(const WeylGroup& g, const Word& w) {
    int el = g.from_word(w);
    if (g.length(el) != int(w.size()))
        throw CLI::ValidationError("--word '" + word_to_string(w) + "' is not reduced (pass --normalize-word to fold it)");
    return el;
}

std::string table_csv(const WeylGroup& group, const HilbertBasisOptions& opts) {
    std::vector<std::string> rows(group.order());
#pragma omp parallel for schedule(dynamic)
    for (size_t w = 0; w < group.order(); ++w) {
        SemigroupCone cone = cone_build(group, int(w));
        HilbertBasisResult hb = hilbert_basis(group, cone, opts);
        std::ostringstream os;
        os << csv_field(word_to_string(group.word(int(w)))) << "," << hb.basis.size() << ","
           << cone.extremal.size() << "\n";
        rows[w] = os.str();
    }
    std::string out = "word,hilbert_basis,extremal_rays\n";
    for (const auto& r : rows) out += r;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with Demazure characters, weight polytopes and their semigroup cones"};
    app.require_subcommand(1);

    CommonArgs args;
    app.add_option("--type", args.type, "simple type letter A,B,C,D,E,F,G")->capture_default_str();
    app.add_option("--rank", args.rank, "rank of the root system")->capture_default_str();
    app.add_option("--out", args.out, "write output to this path (atomic)");
    app.add_option("--format", args.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", args.jobs, "worker threads (default: all cores)");
    app.add_option("--cap-order", args.cap_order, "refuse to enumerate Weyl groups larger than this");
    app.add_option("--seed", args.seed, "seed for the random samplers");
    app.add_option("--cache-dir", args.cache_dir, "sweep cache directory (or DEMAZURE_CACHE_DIR)");

    std::string lambda_s, word_s, mu_s, vword_s;
    int seg_i = 1;
    bool normalize_word = false, faces_check = false, hilbert_table = false, property_p = false, timing = false;
    int max_coord = 1, random_w = 0, min_len = 0, max_len = -1;
    bool serial = false;

    auto* c_char = app.add_subcommand("char", "Demazure character of (lambda, word)");
    auto* c_poly = app.add_subcommand("polytope", "vertex and inequality descriptions of the weight polytope");
    auto* c_points = app.add_subcommand("points", "lattice points of the weight polytope");
    auto* c_seg = app.add_subcommand("segment", "root-line segment through mu in the polytope");
    auto* c_faces = app.add_subcommand("faces", "faces of the polytope and their Levi structure");
    auto* c_cone = app.add_subcommand("cone", "doubled weight cone of an element");
    auto* c_hilb = app.add_subcommand("hilbert", "Hilbert basis of the cone semigroup");
    auto* c_sat = app.add_subcommand("saturate", "compare polytope lattice points with character support");
    auto* c_sweep = app.add_subcommand("sweep", "saturation verification over many (lambda, word) instances");
    auto* c_table = app.add_subcommand("table", "per-element Hilbert basis and ray counts as CSV");

    for (auto* c : {c_char, c_poly, c_points, c_seg, c_faces, c_cone, c_hilb, c_sat, c_sweep, c_table})
        c->fallthrough();
    for (auto* c : {c_char, c_poly, c_points, c_seg, c_faces, c_sat, c_sweep})
        c->add_option("--lambda", lambda_s, "dominant weight, comma separated")->required(c != c_sweep);
    for (auto* c : {c_char, c_poly, c_points, c_seg, c_faces, c_cone, c_hilb, c_sat})
        c->add_option("--word", word_s, "reduced word, comma separated 1-based indices");
    c_char->add_flag("--normalize-word", normalize_word, "fold a non-reduced word to its monoid product first");
    c_seg->add_option("--mu", mu_s, "base point, rational coordinates p/q")->required();
    c_seg->add_option("--i", seg_i, "simple root index (1-based)")->required();
    c_faces->add_flag("--check", faces_check, "run the Levi structure verifications");
    c_faces->add_option("--v-word", vword_s, "restrict to the face of this minimal coset representative");
    c_hilb->add_flag("--table", hilbert_table, "emit the per-element count table instead");
    c_sweep->add_option("--max-coord", max_coord, "largest weight coordinate")->capture_default_str();
    c_sweep->add_option("--random-w", random_w, "sample this many elements instead of all");
    c_sweep->add_option("--min-length", min_len, "keep elements of at least this length");
    c_sweep->add_option("--max-length", max_len, "keep elements of at most this length");
    c_sweep->add_flag("--property-p", property_p, "also verify the fundamental-weight property per element");
    c_sweep->add_flag("--timing", timing, "include wall time in the report (breaks byte stability)");
    c_sweep->add_flag("--serial", serial, "single-threaded reference mode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Session s = open_session(args);
        const WeylGroup& group = *s.group;
        Word word = word_from_string(word_s, args.rank);

        if (c_char->parsed()) {
            IntWeight lambda = parse_lambda(lambda_s, args.rank);
            if (normalize_word) {
                int m = 0;
                for (int j : word) {
                    int next = group.mul_gen_right(m, j);
                    if (group.length(next) > group.length(m)) m = next;
                }
                word = group.word(m);
            }
            int el = checked_word(group, word);
            CharacterPoly ch = demazure_character(group, lambda, group.word(el));
            if (args.format == "csv") {
                emit(args, character_to_csv(ch));
            } else {
                Json j;
                j["lambda"] = weight_to_json(lambda);
                j["word"] = word_to_string(group.word(el));
                j["dimension"] = total_dimension(ch).convert_to<int64_t>();
                j["support"] = ch.size();
                j["records"] = character_to_json(ch);
                emit(args, dump_json(j));
            }
            return kExitOk;
        }
        if (c_poly->parsed()) {
            IntWeight lambda = parse_lambda(lambda_s, args.rank);
            DemazurePolytope p = build_polytope(group, lambda, checked_word(group, word));
            emit(args, dump_json(polytope_to_json(group, p)));
            return kExitOk;
        }
        if (c_points->parsed()) {
            IntWeight lambda = parse_lambda(lambda_s, args.rank);
            DemazurePolytope p = build_polytope(group, lambda, checked_word(group, word));
            auto pts = lattice_points(group, p);
            if (args.format == "csv") {
                std::ostringstream os;
                for (const auto& pt : pts) {
                    for (size_t k = 0; k < pt.size(); ++k) os << (k ? "," : "") << pt[k];
                    os << "\n";
                }
                emit(args, os.str());
            } else {
                Json j;
                j["lambda"] = weight_to_json(lambda);
                j["word"] = word_to_string(group.word(p.w));
                j["count"] = pts.size();
                j["points"] = lattice_points_to_json(pts);
                emit(args, dump_json(j));
            }
            return kExitOk;
        }
        if (c_seg->parsed()) {
            IntWeight lambda = parse_lambda(lambda_s, args.rank);
            RatWeight mu = parse_mu(mu_s, args.rank);
            if (seg_i < 1 || seg_i > args.rank) throw CLI::ValidationError("--i out of range");
            DemazurePolytope p = build_polytope(group, lambda, checked_word(group, word));
            auto seg = root_string_segment(group, p, mu, seg_i - 1);
            Json j = segment_to_json(seg);
            j["lambda"] = weight_to_json(lambda);
            j["word"] = word_to_string(group.word(p.w));
            j["mu"] = weight_to_json(mu);
            j["i"] = seg_i;
            emit(args, dump_json(j));
            return kExitOk;
        }
        if (c_faces->parsed()) {
            IntWeight lambda = parse_lambda(lambda_s, args.rank);
            int w = checked_word(group, word);
            LeviContext levis(group);
            Json out = Json::array();
            bool all_ok = true;
            for (int i = 0; i < args.rank; ++i) {
                for (int v : group.min_coset_reps_maximal(i)) {
                    if (!vword_s.empty() && v != group.from_word(word_from_string(vword_s, args.rank))) continue;
                    Face f = face_data(group, lambda, w, v, i);
                    if (faces_check) {
                        LeviCheckReport rep = levi_face_check(group, levis, f, lambda);
                        all_ok = all_ok && rep.all_ok();
                        out.push_back(face_to_json(group, f, &rep));
                    } else {
                        out.push_back(face_to_json(group, f, nullptr));
                    }
                }
            }
            Json j;
            j["lambda"] = weight_to_json(lambda);
            j["word"] = word_to_string(group.word(w));
            j["faces"] = std::move(out);
            emit(args, dump_json(j));
            return all_ok ? kExitOk : kExitDiscrepancy;
        }
        if (c_cone->parsed() || c_hilb->parsed()) {
            if (c_hilb->parsed() && hilbert_table) {
                emit(args, table_csv(group, {}));
                return kExitOk;
            }
            int w = checked_word(group, word);
            SemigroupCone cone = cone_build(group, w);
            HilbertBasisResult hb = hilbert_basis(group, cone);
            Json j = hilbert_to_json(group, cone, hb);
            if (c_cone->parsed()) {
                Json gens = Json::array();
                const int n = args.rank;
                for (const auto& g : cone.generators) {
                    Json rec;
                    rec["lambda"] = weight_to_json(IntWeight(g.begin(), g.begin() + n));
                    rec["mu"] = weight_to_json(IntWeight(g.begin() + n, g.end()));
                    gens.push_back(std::move(rec));
                }
                j["generators"] = std::move(gens);
            }
            emit(args, dump_json(j));
            return kExitOk;
        }
        if (c_sat->parsed()) {
            IntWeight lambda = parse_lambda(lambda_s, args.rank);
            int el = checked_word(group, word);
            SaturationReport rep = saturation_report(group, lambda, group.word(el), true);
            emit(args, dump_json(saturation_to_json(rep, true)));
            return rep.saturated() ? kExitOk : kExitDiscrepancy;
        }
        if (c_table->parsed()) {
            emit(args, table_csv(group, {}));
            return kExitOk;
        }
        if (c_sweep->parsed()) {
            std::vector<int> ws;
            if (random_w > 0) {
                ws = sample_elements(group, size_t(random_w), args.seed);
            } else {
                for (size_t w = 0; w < group.order(); ++w) ws.push_back(int(w));
            }
            std::vector<int> filtered;
            for (int w : ws) {
                if (group.length(w) < min_len) continue;
                if (max_len >= 0 && group.length(w) > max_len) continue;
                filtered.push_back(w);
            }
            std::vector<SweepInstance> instances;
            for (const auto& lam : enumerate_lambdas(args.rank, max_coord))
                for (int w : filtered) instances.push_back({lam, w});

            SweepOptions opts;
            opts.parallel = !serial;
            opts.jobs = args.jobs;
            opts.check_property_p = property_p;
            opts.timing = timing;
            std::string cache_dir = args.cache_dir;
            if (cache_dir.empty())
                if (const char* env = std::getenv("DEMAZURE_CACHE_DIR")) cache_dir = env;
            if (!cache_dir.empty())
                opts.cache_path = cache_dir + "/" + s.datum->label() + "-" + s.datum->fingerprint() + ".sweepcache";

            SweepReport rep = run_saturation_sweep(group, instances, opts);
            if (args.format == "csv") {
                std::ostringstream os;
                os << "lambda,word,status,lattice_points,support\n";
                for (const auto& rec : rep.records) {
                    std::string lam;
                    for (const auto& c : rec.at("lambda")) lam += (lam.empty() ? "" : ",") + c.dump();
                    os << csv_field(lam) << "," << csv_field(rec.at("word").get<std::string>()) << ","
                       << rec.at("status").get<std::string>() << "," << rec.at("lattice_points") << ","
                       << rec.at("support") << "\n";
                }
                emit(args, os.str());
            } else {
                emit(args, dump_json(rep.to_json()));
            }
            return rep.failures == 0 ? kExitOk : kExitDiscrepancy;
        }
        throw CLI::ValidationError("no subcommand selected");
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDiscrepancy;
    }
}
