// Command-line front end. Every command is a thin adapter over the library:
// parse input, call one entry point, render the result. Reports go to
// stdout, progress and diagnostics to stderr.
//
// Exit codes: 0 success / property holds; 1 property fails or a
// mathematical precondition on well-formed input fails (witness or reason
// emitted); 2 malformed input or usage; 3 resource cap hit.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "loopkit/certificates.hpp"
#include "loopkit/constructions.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/normal.hpp"
#include "loopkit/properties.hpp"
#include "loopkit/report.hpp"
#include "loopkit/subloops.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace loopkit;

namespace {

struct Global {
  int threads = 1;
  std::size_t max_subloops = EnumerationLimits{}.max_subloops;
  std::string format = "text";

  ReportFormat fmt() const {
    return format == "text" ? ReportFormat::Text : ReportFormat::Structured;
  }
  EnumerationLimits limits() const {
    EnumerationLimits l;
    l.max_subloops = max_subloops;
    return l;
  }
};

CayleyTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot read '" + path + "'");
  return parse_table(in);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw SyntaxError("cannot write '" + path + "'");
  out << content;
  if (!out) throw SyntaxError("write to '" + path + "' failed");
}

void emit_error(const Global& g, const std::string& code, const std::string& message) {
  if (g.fmt() == ReportFormat::Structured) {
    ordered_json j;
    j["error"] = code;
    j["message"] = message;
    std::cout << j.dump(2) << "\n";
  }
  std::cerr << "error (" << code << "): " << message << "\n";
}

int exit_code_for(const Error& e) {
  const std::string& c = e.code();
  if (c == "capacity" || c == "oracle-bound") return 3;
  // definite negative answers about mathematically well-formed input
  if (c == "not-normal" || c == "not-a-subloop" || c == "not-a-group" ||
      c == "search-exhausted")
    return 1;
  return 2;
}

int run_guarded(const Global& g, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    emit_error(g, e.code(), e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    emit_error(g, "internal", e.what());
    return 2;
  }
}

SubsetMask parse_element_list(const std::string& text, int order) {
  SubsetMask m;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, e - b + 1);
    std::size_t pos = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &pos);
    } catch (...) {
      throw SyntaxError("bad element '" + tok + "' in --normal list");
    }
    if (pos != tok.size() || v < 0 || v >= order)
      throw SyntaxError("element '" + tok + "' out of range [0, " + std::to_string(order) + ")");
    m.set(v);
  }
  if (m.count() == 0) throw SyntaxError("--normal list is empty");
  return m;
}

std::string summary_doc(const Global& g, std::initializer_list<std::pair<std::string, ordered_json>> kv) {
  if (g.fmt() == ReportFormat::Structured) {
    ordered_json j;
    for (const auto& [k, v] : kv) j[k] = v;
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& [k, v] : kv) {
    out += k + ": ";
    out += v.is_string() ? v.get<std::string>() : v.dump();
    out += '\n';
  }
  return out;
}

std::vector<SubsetMask> read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  std::vector<SubsetMask> masks;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    SubsetMask m;
    std::stringstream ss(line);
    int v;
    while (ss >> v)
      if (v >= 0 && v < kMaxOrder) m.set(v);
    if (m.count()) masks.push_back(m);
  }
  return masks;
}

void write_checkpoint(const std::string& path, const std::vector<SubsetMask>& masks) {
  std::string tmp = path + ".tmp";
  std::ofstream out(tmp);
  for (const SubsetMask& m : masks) {
    bool first = true;
    for (Elem x : m.elements()) {
      if (!first) out << ' ';
      first = false;
      out << x;
    }
    out << '\n';
  }
  out.close();
  fs::rename(tmp, path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite loop toolkit: validation, properties, subloop lattices, "
               "Lagrange decisions with certificates, and constructions"};
  app.require_subcommand(1);

  auto g = std::make_shared<Global>();
  app.add_option("--threads", g->threads, "worker thread count")
      ->envname("LOOPKIT_THREADS")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-subloops", g->max_subloops, "cap on enumerated subloops")
      ->envname("LOOPKIT_MAX_SUBLOOPS")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g->format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::function<int()> action;

  // validate FILE
  {
    auto* sub = app.add_subcommand("validate", "check that FILE is a loop table");
    sub->fallthrough();
    auto file = std::make_shared<std::string>();
    sub->add_option("FILE", *file)->required();
    sub->callback([=, &action] {
      action = [=] {
        CayleyTable L = load_table(*file);
        std::cout << summary_doc(*g, {{"valid", true}, {"order", L.order()}});
        return 0;
      };
    });
  }

  // props FILE
  {
    auto* sub = app.add_subcommand("props", "full property report for FILE");
    sub->fallthrough();
    auto file = std::make_shared<std::string>();
    auto skip_lagrange = std::make_shared<bool>(false);
    sub->add_option("FILE", *file)->required();
    sub->add_flag("--skip-lagrange", *skip_lagrange,
                  "leave out the subloop-enumeration-based checks");
    sub->callback([=, &action] {
      action = [=] {
        CayleyTable L = load_table(*file);
        PropertyReport r = full_report(L, g->limits(), g->threads, !*skip_lagrange);
        std::cout << report_properties(r, g->fmt());
        return 0;
      };
    });
  }

  // subloops FILE [--lattice] [--checkpoint FILE]
  {
    auto* sub = app.add_subcommand("subloops", "enumerate every subloop of FILE");
    sub->fallthrough();
    auto file = std::make_shared<std::string>();
    auto lattice = std::make_shared<bool>(false);
    auto ckpt = std::make_shared<std::string>();
    sub->add_option("FILE", *file)->required();
    sub->add_flag("--lattice", *lattice, "include the containment relation");
    sub->add_option("--checkpoint", *ckpt,
                    "persist progress to this file and resume from it if present");
    sub->callback([=, &action] {
      action = [=] {
        CayleyTable L = load_table(*file);
        std::vector<SubsetMask> found;
        if (ckpt->empty()) {
          found = enumerate_subloops(L, g->limits(), g->threads);
        } else {
          std::vector<SubsetMask> seed = read_checkpoint(*ckpt);
          if (!seed.empty())
            std::cerr << "resuming from " << seed.size() << " checkpointed subloops\n";
          std::function<void(const std::vector<SubsetMask>&)> sink =
              [&](const std::vector<SubsetMask>& masks) {
                write_checkpoint(*ckpt, masks);
                std::cerr << "checkpoint: " << masks.size() << " subloops\n";
              };
          found = enumerate_subloops(L, g->limits(), g->threads,
                                     seed.empty() ? nullptr : &seed, &sink);
          write_checkpoint(*ckpt, found);
        }
        SubloopLattice lat;
        lat.subloops = std::move(found);
        if (*lattice) {
          for (std::uint32_t i = 0; i < lat.subloops.size(); ++i)
            for (std::uint32_t j = 0; j < lat.subloops.size(); ++j)
              if (i != j && lat.subloops[i].count() < lat.subloops[j].count() &&
                  lat.subloops[i].subset_of(lat.subloops[j]))
                lat.containment.emplace_back(i, j);
        }
        std::cout << report_lattice(lat, g->fmt(), *lattice);
        return 0;
      };
    });
  }

  // lagrange FILE [--strong] [--certificate OUT]
  {
    auto* sub = app.add_subcommand(
        "lagrange", "decide the weak (default) or strong Lagrange property for FILE");
    sub->fallthrough();
    auto file = std::make_shared<std::string>();
    auto strong = std::make_shared<bool>(false);
    auto cert_out = std::make_shared<std::string>();
    sub->add_option("FILE", *file)->required();
    sub->add_flag("--strong", *strong, "decide the strong property");
    sub->add_option("--certificate", *cert_out, "write the proof tree to this file");
    sub->callback([=, &action] {
      action = [=] {
        CayleyTable L = load_table(*file);
        Certificate c = *strong ? decide_strong(L, g->limits(), g->threads)
                                : decide_weak(L, g->limits(), g->threads);
        if (!cert_out->empty()) write_file(*cert_out, serialize_certificate(c));
        std::cout << report_certificate(c, g->fmt());
        return c.holds ? 0 : 1;
      };
    });
  }

  // quotient FILE --normal "i,j,..." -o OUT
  {
    auto* sub = app.add_subcommand("quotient", "quotient of FILE by a normal subloop");
    sub->fallthrough();
    auto file = std::make_shared<std::string>();
    auto normal_list = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    sub->add_option("FILE", *file)->required();
    sub->add_option("--normal", *normal_list, "comma-separated subloop elements")->required();
    sub->add_option("-o,--output", *out, "quotient table file")->required();
    sub->callback([=, &action] {
      action = [=] {
        CayleyTable L = load_table(*file);
        SubsetMask N = parse_element_list(*normal_list, L.order());
        QuotientMap q = quotient(L, N);
        write_file(*out, serialize_table(q.quotient));
        std::string side = *out + ".cosets";
        std::string map_text = "# element block\n";
        for (int x = 0; x < L.order(); ++x)
          map_text += std::to_string(x) + " " + std::to_string(q.block_of[std::size_t(x)]) + "\n";
        write_file(side, map_text);
        std::cout << summary_doc(*g, {{"order", q.quotient.order()},
                                      {"file", *out},
                                      {"cosets", side}});
        return 0;
      };
    });
  }

  // paige Q -o OUT
  {
    auto* sub = app.add_subcommand("paige", "construct the Paige loop for GF(Q)");
    sub->fallthrough();
    auto q = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    sub->add_option("Q", *q, "field order")->required();
    sub->add_option("-o,--output", *out, "table file")->required();
    sub->callback([=, &action] {
      action = [=] {
        CayleyTable L = paige_loop(*q);
        write_file(*out, serialize_table(L));
        std::cout << summary_doc(*g, {{"order", L.order()}, {"file", *out}});
        return 0;
      };
    });
  }

  // group cyclic N | product F1 F2 | chein FILE, all with -o OUT
  {
    auto* grp = app.add_subcommand("group", "group and doubled-group constructions");
    grp->require_subcommand(1);
    grp->fallthrough();

    auto* cyc = grp->add_subcommand("cyclic", "cyclic group of order N");
    cyc->fallthrough();
    auto n = std::make_shared<int>(0);
    auto cyc_out = std::make_shared<std::string>();
    cyc->add_option("N", *n, "order")->required()->check(CLI::PositiveNumber);
    cyc->add_option("-o,--output", *cyc_out)->required();
    cyc->callback([=, &action] {
      action = [=] {
        if (*n > kMaxOrder)
          throw CapacityError("order " + std::to_string(*n) + " exceeds capacity " +
                              std::to_string(kMaxOrder));
        CayleyTable L = cyclic_group(*n);
        write_file(*cyc_out, serialize_table(L));
        std::cout << summary_doc(*g, {{"order", L.order()}, {"file", *cyc_out}});
        return 0;
      };
    });

    auto* prod = grp->add_subcommand("product", "direct product of two loop tables");
    prod->fallthrough();
    auto f1 = std::make_shared<std::string>();
    auto f2 = std::make_shared<std::string>();
    auto prod_out = std::make_shared<std::string>();
    prod->add_option("F1", *f1)->required();
    prod->add_option("F2", *f2)->required();
    prod->add_option("-o,--output", *prod_out)->required();
    prod->callback([=, &action] {
      action = [=] {
        CayleyTable L = direct_product(load_table(*f1), load_table(*f2));
        write_file(*prod_out, serialize_table(L));
        std::cout << summary_doc(*g, {{"order", L.order()}, {"file", *prod_out}});
        return 0;
      };
    });

    auto* chein = grp->add_subcommand("chein", "Chein double of a group table");
    chein->fallthrough();
    auto cf = std::make_shared<std::string>();
    auto chein_out = std::make_shared<std::string>();
    chein->add_option("FILE", *cf)->required();
    chein->add_option("-o,--output", *chein_out)->required();
    chein->callback([=, &action] {
      action = [=] {
        CayleyTable L = chein_double(load_table(*cf));
        write_file(*chein_out, serialize_table(L));
        std::cout << summary_doc(*g, {{"order", L.order()}, {"file", *chein_out}});
        return 0;
      };
    });
  }

  // census N -o DIR
  {
    auto* sub = app.add_subcommand("census",
                                   "every loop of order N up to isomorphism, one file per class");
    sub->fallthrough();
    auto n = std::make_shared<int>(0);
    auto dir = std::make_shared<std::string>();
    sub->add_option("N", *n, "order")->required();
    sub->add_option("-o,--output", *dir, "output directory")->required();
    sub->callback([=, &action] {
      action = [=] {
        std::vector<CayleyTable> reps = enumerate_loops(*n);
        fs::create_directories(*dir);
        ordered_json entries = ordered_json::array();
        for (std::size_t i = 0; i < reps.size(); ++i) {
          char name[32];
          std::snprintf(name, sizeof name, "loop_%d_%03zu.tbl", *n, i);
          write_file((fs::path(*dir) / name).string(), serialize_table(reps[i]));
          const CayleyTable& L = reps[i];
          bool order2 = false;
          for (int x = 0; x < L.order(); ++x)
            if (static_cast<Elem>(x) != L.identity() &&
                L.mul(static_cast<Elem>(x), static_cast<Elem>(x)) == L.identity())
              order2 = true;
          ordered_json e;
          e["file"] = name;
          e["associative"] = is_associative(L, g->threads).holds;
          e["commutative"] = is_commutative(L, g->threads).holds;
          e["hasOrder2Element"] = order2;
          e["weakLagrange"] = weak_lagrange(L, g->limits(), g->threads).holds;
          e["strongLagrange"] = strong_lagrange(L, g->limits(), g->threads).holds;
          entries.push_back(std::move(e));
          if (reps.size() > 20 && (i + 1) % 20 == 0)
            std::cerr << "census: " << (i + 1) << "/" << reps.size() << " classes written\n";
        }
        ordered_json manifest;
        manifest["order"] = *n;
        manifest["classes"] = reps.size();
        manifest["entries"] = std::move(entries);
        write_file((fs::path(*dir) / "manifest.json").string(), manifest.dump(2) + "\n");
        std::cout << summary_doc(*g, {{"order", *n},
                                      {"classes", reps.size()},
                                      {"directory", *dir}});
        return 0;
      };
    });
  }

  // search-order10 -o OUT
  {
    auto* sub = app.add_subcommand(
        "search-order10",
        "find an order-10 loop satisfying the weak but not the strong Lagrange property");
    sub->fallthrough();
    auto out = std::make_shared<std::string>();
    sub->add_option("-o,--output", *out, "table file")->required();
    sub->callback([=, &action] {
      action = [=] {
        CayleyTable L = search_order10_counterexample();
        write_file(*out, serialize_table(L));
        std::cout << summary_doc(*g, {{"order", L.order()}, {"file", *out}});
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints help or the usage message
    return rc == 0 ? 0 : 2;
  }
  if (!action) {
    std::cerr << "error (usage): no command selected\n";
    return 2;
  }
  return run_guarded(*g, action);
}
