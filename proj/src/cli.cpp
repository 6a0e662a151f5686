#include "hodgelat/cli.hpp"

#include <cstdlib>
#include <map>
#include <ostream>

#include "hodgelat/certify.hpp"

namespace hodgelat::cli {

namespace {

struct Usage {
    std::string message;
};

[[noreturn]] void usage(const std::string& message) { throw Usage{message}; }

const char* kUsageText =
    "usage: hodgelat <command> ...\n"
    "  info <lattice.json>\n"
    "  genus <lattice.json>\n"
    "  twist <model.json> --phi <matrix.json>\n"
    "  isom <a.json> <b.json> [--bound N]\n"
    "  embed-k3 <lattice.json>\n"
    "  glue <ambient.json> --s <basis.json> --t <basis.json>\n"
    "  certify --mode {k3|hk4|moduli} <inputs.json>\n"
    "  enumerate-twists <model.json> --disc D\n"
    "  k3 validate <model.json>\n";

struct Parsed {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;
};

Parsed parse_args(const std::vector<std::string>& args, size_t start,
                  const std::vector<std::string>& known_flags) {
    Parsed out;
    for (size_t i = start; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) == 0) {
            bool known = false;
            for (const auto& f : known_flags) known = known || (a == f);
            if (!known) usage("unknown flag: " + a);
            if (i + 1 >= args.size()) usage("flag needs a value: " + a);
            out.flags[a] = args[++i];
        } else {
            out.positional.push_back(a);
        }
    }
    return out;
}

int parse_bound(const Parsed& p) {
    int bound = kDefaultSearchBound;
    if (const char* env = std::getenv("HODGELAT_SEARCH_BOUND")) {
        try {
            bound = std::stoi(env);
        } catch (...) {
            usage("HODGELAT_SEARCH_BOUND must be a positive integer");
        }
    }
    auto it = p.flags.find("--bound");
    if (it != p.flags.end()) {
        try {
            bound = std::stoi(it->second);
        } catch (...) {
            usage("--bound must be a positive integer");
        }
    }
    if (bound <= 0) usage("search bound must be positive");
    return bound;
}

IntMatrix basis_from_file(const std::string& path) {
    Json j = load_json_file(path);
    if (j.is_object() && j.contains("basis")) return int_matrix_from_json(j["basis"]);
    return int_matrix_from_json(j);
}

Json cmd_info(const Parsed& p) {
    if (p.positional.size() != 1) usage("info takes one lattice file");
    Lattice l = lattice_from_json(load_json_file(p.positional[0]));
    Json out = lattice_to_json(l);
    out["rank"] = l.rank();
    out["disc"] = json_int(l.disc());
    out["signature"] = inertia_to_json(l.signature());
    out["even"] = true;  // construction enforces evenness
    return out;
}

Json cmd_genus(const Parsed& p) {
    if (p.positional.size() != 1) usage("genus takes one lattice file");
    Lattice l = lattice_from_json(load_json_file(p.positional[0]));
    return genus_to_json(genus_invariants(l));
}

Json cmd_twist(const Parsed& p) {
    if (p.positional.size() != 1 || !p.flags.count("--phi"))
        usage("twist takes one model file and --phi <matrix.json>");
    HodgeLatticeModel model = model_from_json(load_json_file(p.positional[0]));
    RatMatrix phi = rat_matrix_from_json(load_json_file(p.flags.at("--phi")));
    HodgeEndomorphism endo = admit_twist(model, phi);
    HodgeLatticeModel twisted = twist(model, endo);
    TwistDiscProof proof = verify_twist_discriminant(model, endo);
    Json out;
    out["lattice"] = lattice_to_json(twisted.lattice);
    Json identity;
    identity["norm"] = json_rat(proof.norm);
    identity["m"] = proof.m;
    identity["disc_source"] = json_int(proof.disc_before);
    identity["disc_twisted"] = json_int(proof.disc_after);
    identity["predicted"] = json_rat(proof.predicted);
    identity["holds"] = (proof.predicted == Rat(proof.disc_after));
    out["disc_identity"] = identity;
    return out;
}

Json cmd_isom(const Parsed& p) {
    if (p.positional.size() != 2) usage("isom takes two lattice files");
    Lattice a = lattice_from_json(load_json_file(p.positional[0]));
    Lattice b = lattice_from_json(load_json_file(p.positional[1]));
    int bound = parse_bound(p);
    return isometry_verdict_to_json(lattices_isometric(a, b, bound), bound);
}

Json cmd_embed(const Parsed& p) {
    if (p.positional.size() != 1) usage("embed-k3 takes one lattice file");
    Lattice l = lattice_from_json(load_json_file(p.positional[0]));
    return embed_verdict_to_json(embeds_primitively_in_k3_lattice(l));
}

Json cmd_glue(const Parsed& p) {
    if (p.positional.size() != 1 || !p.flags.count("--s") || !p.flags.count("--t"))
        usage("glue takes one ambient file plus --s <basis.json> and --t <basis.json>");
    Lattice h = lattice_from_json(load_json_file(p.positional[0]));
    Sublattice s = make_sublattice(h, basis_from_file(p.flags.at("--s")));
    Sublattice t = make_sublattice(h, basis_from_file(p.flags.at("--t")));
    Int index = glue_index(h, s, t);
    Json out;
    out["index"] = json_int(index);
    out["disc_ambient"] = json_int(h.disc());
    out["disc_s"] = json_int(abs(determinant(s.induced_gram())));
    out["disc_t"] = json_int(abs(determinant(t.induced_gram())));
    return out;
}

Json cmd_certify(const Parsed& p) {
    if (p.positional.size() != 1 || !p.flags.count("--mode"))
        usage("certify takes --mode {k3|hk4|moduli} and one inputs file");
    const std::string mode = p.flags.at("--mode");
    Json inputs = load_json_file(p.positional[0]);
    EquivalenceCertificate cert;
    if (mode == "k3") {
        if (!inputs.is_object() || !inputs.contains("X") || !inputs.contains("Y"))
            fail(ErrorCode::ParseError, "k3 inputs need \"X\" and \"Y\"");
        cert = certify_l_implies_d(k3_model_from_json(inputs["X"]),
                                   k3_model_from_json(inputs["Y"]));
    } else if (mode == "hk4") {
        if (!inputs.is_object() || !inputs.contains("t_iso") || !inputs.contains("g") ||
            !inputs.contains("d") || !inputs["t_iso"].is_boolean())
            fail(ErrorCode::ParseError, "hk4 inputs need \"t_iso\", \"g\", and \"d\"");
        HkFourfoldInputs in;
        in.t_iso = inputs["t_iso"].get<bool>();
        in.g = int_from_json(inputs["g"]);
        in.d = int_from_json(inputs["d"]);
        if (inputs.contains("div_h")) in.div_h = int_from_json(inputs["div_h"]);
        if (inputs.contains("h_lattice")) in.h_lattice = lattice_from_json(inputs["h_lattice"]);
        if (inputs.contains("h_vector")) in.h_vector = int_vector_from_json(inputs["h_vector"]);
        cert = certify_hk_fourfold(in);
    } else if (mode == "moduli") {
        if (!inputs.is_object() || !inputs.contains("ns") || !inputs.contains("t_iso") ||
            !inputs.contains("rank_t") || !inputs["t_iso"].is_boolean() ||
            !inputs["rank_t"].is_number_integer())
            fail(ErrorCode::ParseError, "moduli inputs need \"ns\", \"t_iso\", and \"rank_t\"");
        cert = certify_moduli_unimodular(lattice_from_json(inputs["ns"]),
                                         inputs["t_iso"].get<bool>(),
                                         inputs["rank_t"].get<int>());
    } else {
        usage("unknown certify mode: " + mode);
    }
    return certificate_to_json(cert);
}

Json cmd_enumerate_twists(const Parsed& p) {
    if (p.positional.size() != 1 || !p.flags.count("--disc"))
        usage("enumerate-twists takes one model file and --disc D");
    HodgeLatticeModel model = model_from_json(load_json_file(p.positional[0]));
    Int target;
    try {
        target = Int(p.flags.at("--disc"));
    } catch (const std::invalid_argument&) {
        usage("--disc must be an integer");
    }
    std::vector<Rat> scalars = enumerate_scalar_twists(model, target);
    Json out;
    out["target_disc"] = json_int(target);
    Json list = Json::array();
    for (const Rat& q : scalars) list.push_back(json_rat(q));
    out["scalars"] = list;
    return out;
}

Json cmd_k3_validate(const Parsed& p) {
    if (p.positional.size() != 1) usage("k3 validate takes one model file");
    K3SurfaceModel m = k3_model_from_json(load_json_file(p.positional[0]));
    Json out;
    out["valid"] = true;
    out["rho"] = m.picard_rank;
    out["rank_t"] = m.t_model.rank();
    out["disc_t"] = json_int(m.t_model.lattice.disc());
    out["signature_ns"] = inertia_to_json(rational_inertia(to_rational(m.ns_sub.induced_gram())));
    out["signature_t"] = inertia_to_json(m.t_model.lattice.signature());
    out["glue_index"] = json_int(glue_index(m.ambient, m.ns_sub, m.t_sub));
    return out;
}

int error_exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::IoError:
            return kExitData;
        case ErrorCode::UsageError:
            return kExitUsage;
        case ErrorCode::InternalAssertion:
            return kExitInternal;
        default:
            return kExitDomain;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty()) usage("missing command");
        const std::string& cmd = args[0];
        Json doc;
        if (cmd == "info") doc = cmd_info(parse_args(args, 1, {}));
        else if (cmd == "genus") doc = cmd_genus(parse_args(args, 1, {}));
        else if (cmd == "twist") doc = cmd_twist(parse_args(args, 1, {"--phi"}));
        else if (cmd == "isom") doc = cmd_isom(parse_args(args, 1, {"--bound"}));
        else if (cmd == "embed-k3") doc = cmd_embed(parse_args(args, 1, {}));
        else if (cmd == "glue") doc = cmd_glue(parse_args(args, 1, {"--s", "--t"}));
        else if (cmd == "certify") doc = cmd_certify(parse_args(args, 1, {"--mode"}));
        else if (cmd == "enumerate-twists")
            doc = cmd_enumerate_twists(parse_args(args, 1, {"--disc"}));
        else if (cmd == "k3") {
            if (args.size() < 2 || args[1] != "validate") usage("unknown k3 subcommand");
            doc = cmd_k3_validate(parse_args(args, 2, {}));
        } else {
            usage("unknown command: " + cmd);
        }
        out << doc.dump(2) << "\n";
        return kExitOk;
    } catch (const Usage& u) {
        Json doc;
        doc["error"] = "usage";
        doc["message"] = u.message;
        out << doc.dump(2) << "\n";
        err << u.message << "\n" << kUsageText;
        return kExitUsage;
    } catch (const Error& e) {
        Json doc;
        doc["error"] = error_code_name(e.code());
        doc["message"] = e.what();
        out << doc.dump(2) << "\n";
        err << error_code_name(e.code()) << ": " << e.what() << "\n";
        return error_exit_code(e.code());
    } catch (const std::exception& e) {
        Json doc;
        doc["error"] = "internal";
        doc["message"] = e.what();
        out << doc.dump(2) << "\n";
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace hodgelat::cli
