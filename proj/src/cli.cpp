#include "yangian/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "yangian/braid_action.hpp"
#include "yangian/cyclicity.hpp"
#include "yangian/json_io.hpp"
#include "yangian/numbering.hpp"
#include "yangian/reference.hpp"

namespace yangian::cli {

namespace {

struct Options {
  std::string family;
  int rank = 0;
  std::string numbering;
  std::string format = "json";
  std::string word;
  std::uint64_t seed = 1;
  int iters = 100;
  int jobs = 1;

  std::string tuple;
  Node b1 = 0, b2 = 0;
  int m1 = 1, m2 = 1;
  std::string factors;
  bool compare = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A value naming an existing file is read from disk, anything else is taken inline.
std::string file_or_inline(const std::string& value) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(value, ec)) return read_file(value);
  return value;
}

LieDatum datum_from(const Options& o) {
  if (o.family.empty()) throw Error("missing --family");
  const LieType type = parse_lie_type(o.family, o.rank);
  return o.numbering.empty() ? make_lie_datum(type) : make_lie_datum(type, o.numbering);
}

WeylWord w0_from(const LieDatum& datum, const Options& o) {
  if (o.word.empty()) return longest_word(datum);
  return parse_word(datum, file_or_inline(o.word));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string braces(const std::vector<GaussianRational>& values) {
  std::string s = "{";
  for (std::size_t k = 0; k < values.size(); ++k) s += (k ? ", " : "") + to_string(values[k]);
  return s + "}";
}

std::vector<KrFactor> parse_factors(const std::string& text) {
  std::vector<KrFactor> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    std::vector<std::string> parts;
    std::stringstream fields(item);
    std::string f;
    while (std::getline(fields, f, ':')) parts.push_back(f);
    if (parts.size() != 3) throw Error("factor '" + item + "' is not of the form b:a:m");
    KrFactor k;
    try {
      k.node = std::stoi(parts[0]);
      k.length = std::stoi(parts[2]);
    } catch (const std::exception&) {
      throw Error("factor '" + item + "' has a non-integer node or length");
    }
    if (k.length < 1) throw Error("factor '" + item + "' has length < 1");
    k.base = parse_gaussian(parts[1]);
    out.push_back(std::move(k));
  }
  if (out.empty()) throw Error("--factors is empty");
  return out;
}

int cmd_cartan(const Options& o, std::ostream& out) {
  emit(out, cartan_to_json(datum_from(o)));
  return 0;
}

int cmd_w0(const Options& o, std::ostream& out) {
  const LieDatum datum = datum_from(o);
  emit(out, word_to_json(w0_from(datum, o)));
  return 0;
}

int cmd_braid_apply(const Options& o, std::ostream& out) {
  const LieDatum datum = datum_from(o);
  if (o.word.empty()) throw Error("missing --word");
  if (o.tuple.empty()) throw Error("missing --tuple");
  const WeylWord word = parse_word(datum, file_or_inline(o.word));
  const RationalTuple p = tuple_from_json(datum, Json::parse(file_or_inline(o.tuple)));
  emit(out, tuple_to_json(apply_word(datum, word, p)));
  return 0;
}

int cmd_verify_braid(const Options& o, std::ostream& out) {
  const LieDatum datum = datum_from(o);
  if (o.iters < 1) throw Error("--iters must be positive");
  const BraidVerification v = verify_braid_relations(datum, o.iters, o.seed);
  Json j;
  j["family"] = datum.type().name();
  j["numbering"] = datum.numbering();
  j["iters"] = o.iters;
  j["seed"] = o.seed;
  j["checks"] = v.checks;
  j["passed"] = v.passed();
  if (v.failure) {
    j["counterexample"] = Json{{"i", v.failure->i}, {"j", v.failure->j},
                               {"tuple", tuple_to_json(v.failure->tuple)}};
  }
  emit(out, j);
  return v.passed() ? 0 : 1;
}

int cmd_sets_fundamental(const Options& o, std::ostream& out) {
  const LieDatum datum = datum_from(o);
  datum.require_node(o.b1);
  datum.require_node(o.b2);
  const WeylWord word = w0_from(datum, o);
  const CyclicitySet s = fundamental_set(datum, word, o.b1, o.b2);
  if (o.format == "markdown") {
    out << "S(" << o.b1 << "," << o.b2 << ") = " << braces(s.values()) << '\n';
    return 0;
  }
  Json j;
  j["family"] = datum.type().name();
  j["numbering"] = datum.numbering();
  j["word"] = word_to_json(word);
  j["b1"] = o.b1;
  j["b2"] = o.b2;
  const Json body = set_to_json(s);
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(out, j);
  return 0;
}

int cmd_sets_kr(const Options& o, std::ostream& out) {
  const LieDatum datum = datum_from(o);
  datum.require_node(o.b1);
  datum.require_node(o.b2);
  if (o.m1 < 1 || o.m2 < 1) throw Error("--m1 and --m2 must be positive");
  const WeylWord word = w0_from(datum, o);
  const CyclicitySet s = kr_set(datum, word, o.b1, o.m1, o.b2, o.m2);
  if (o.format == "markdown") {
    out << "S(" << o.b1 << "," << o.m1 << ";" << o.b2 << "," << o.m2
        << ") = " << braces(s.values()) << '\n';
    return 0;
  }
  Json j;
  j["family"] = datum.type().name();
  j["numbering"] = datum.numbering();
  j["word"] = word_to_json(word);
  j["b1"] = o.b1;
  j["m1"] = o.m1;
  j["b2"] = o.b2;
  j["m2"] = o.m2;
  const Json body = set_to_json(s);
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(out, j);
  return 0;
}

int cmd_check_tensor(const Options& o, std::ostream& out) {
  const LieDatum datum = datum_from(o);
  const WeylWord word = w0_from(datum, o);
  const auto factors = parse_factors(o.factors);
  const CyclicityCertificate cert = check_tensor(datum, word, factors);
  if (o.format == "markdown") {
    out << "verdict: " << (cert.verdict == Verdict::Cyclic ? "Cyclic" : "Unknown") << '\n';
    for (const auto& p : cert.pairs)
      out << "- (" << p.first + 1 << "," << p.second + 1 << ") a_n - a_m = "
          << to_string(p.difference) << (p.member ? " in " : " not in ")
          << braces(p.tested.values()) << '\n';
  } else {
    Json j;
    j["family"] = datum.type().name();
    j["numbering"] = datum.numbering();
    const Json body = certificate_to_json(cert, factors);
    for (const auto& [k, v] : body.items()) j[k] = v;
    emit(out, j);
  }
  return cert.verdict == Verdict::Cyclic ? 0 : 2;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const LieDatum datum = datum_from(o);
  const WeylWord word = w0_from(datum, o);
  const int l = datum.rank();
  std::vector<std::vector<CyclicitySet>> rows(l);
  std::vector<std::string> failures(l);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k; (k = next++) < l;) {
      try {
        rows[k] = fundamental_row(datum, word, k + 1);
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  };
  const int jobs = std::clamp(o.jobs, 1, l);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& f : failures)
    if (!f.empty()) throw Error(f);

  auto published = [&](Node b1, Node b2) { return reference_set(datum.type(), b1, b2); };

  if (o.format == "markdown") {
    out << "# S(b1,b2) for " << datum.type().name() << " (" << datum.numbering() << ")\n\n";
    out << "| b1 \\ b2 |";
    for (Node b2 = 1; b2 <= l; ++b2) out << ' ' << b2 << " |";
    out << "\n|---|";
    for (Node b2 = 1; b2 <= l; ++b2) out << "---|";
    out << '\n';
    for (Node b1 = 1; b1 <= l; ++b1) {
      out << "| " << b1 << " |";
      for (Node b2 = 1; b2 <= l; ++b2) out << ' ' << braces(rows[b1 - 1][b2 - 1].values()) << " |";
      out << '\n';
    }
    if (o.compare) {
      out << "\nDifferences from the published values:\n\n";
      int n = 0;
      for (Node b1 = 1; b1 <= l; ++b1)
        for (Node b2 = 1; b2 <= l; ++b2) {
          auto ref = published(b1, b2);
          auto got = rows[b1 - 1][b2 - 1].values();
          if (ref && *ref != got) {
            out << "- S(" << b1 << "," << b2 << "): computed " << braces(got) << ", published "
                << braces(*ref) << '\n';
            ++n;
          }
        }
      if (n == 0) out << "none\n";
    }
    return 0;
  }

  Json j;
  j["family"] = datum.type().name();
  j["numbering"] = datum.numbering();
  j["word"] = word_to_json(word);
  Json sets = Json::array();
  for (Node b1 = 1; b1 <= l; ++b1)
    for (Node b2 = 1; b2 <= l; ++b2) {
      Json cell;
      cell["b1"] = b1;
      cell["b2"] = b2;
      cell["values"] = set_to_json(rows[b1 - 1][b2 - 1], false)["values"];
      if (o.compare) {
        auto ref = published(b1, b2);
        if (ref) {
          Json pv = Json::array();
          for (const auto& v : *ref) pv.push_back(to_string(v));
          cell["published"] = std::move(pv);
          cell["matches"] = *ref == rows[b1 - 1][b2 - 1].values();
        } else {
          cell["published"] = nullptr;
        }
      }
      sets.push_back(std::move(cell));
    }
  j["sets"] = std::move(sets);
  emit(out, j);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Braid group action on Drinfeld tuples and cyclicity sets for Yangians", "yangian"};
  app.require_subcommand(1);
  app.add_option("--family", o.family, "Lie type, e.g. E6, G2, or A with --rank");
  app.add_option("--rank", o.rank, "rank for classical families");
  app.add_option("--numbering", o.numbering, "Dynkin numbering convention");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--word", o.word, "reduced word: file path or inline letters");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--iters", o.iters, "iterations per check");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  enum class Cmd { None, Cartan, W0, BraidApply, VerifyBraid, SetsFund, SetsKr, CheckTensor, Tables };
  Cmd cmd = Cmd::None;

  auto sub = [](CLI::App& parent, const char* name, const char* help) {
    CLI::App* s = parent.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  auto* cartan = sub(app, "cartan", "Cartan matrix and symmetrizers as JSON");
  auto* w0 = sub(app, "w0", "reduced word for the longest Weyl group element");
  for (auto* s : {cartan, w0}) {
    s->add_option("family_pos", o.family, "Lie type");
    s->add_option("rank_pos", o.rank, "rank");
  }
  cartan->callback([&] { cmd = Cmd::Cartan; });
  w0->callback([&] { cmd = Cmd::W0; });

  auto* braid = sub(app, "braid", "braid group action");
  braid->require_subcommand(1);
  auto* apply = sub(*braid, "apply", "apply T_w to a tuple");
  apply->add_option("--tuple", o.tuple, "tuple as JSON or a JSON file")->required();
  apply->callback([&] { cmd = Cmd::BraidApply; });

  auto* verify = sub(app, "verify", "property checks");
  verify->require_subcommand(1);
  auto* vbraid = sub(*verify, "braid", "check the braid relations on random tuples");
  vbraid->callback([&] { cmd = Cmd::VerifyBraid; });

  auto* sets = sub(app, "sets", "cyclicity failure sets");
  sets->require_subcommand(1);
  auto* fund = sub(*sets, "fundamental", "S(b1,b2) for fundamental representations");
  fund->add_option("--b1", o.b1)->required();
  fund->add_option("--b2", o.b2)->required();
  fund->callback([&] { cmd = Cmd::SetsFund; });
  auto* kr = sub(*sets, "kr", "failure set for two Kirillov-Reshetikhin modules");
  kr->add_option("--b1", o.b1)->required();
  kr->add_option("--m1", o.m1)->required();
  kr->add_option("--b2", o.b2)->required();
  kr->add_option("--m2", o.m2)->required();
  kr->callback([&] { cmd = Cmd::SetsKr; });

  auto* check = sub(app, "check", "cyclicity certificates");
  check->require_subcommand(1);
  auto* tensor = sub(*check, "tensor", "certificate for an ordered tensor product");
  tensor->add_option("--factors", o.factors, "b:a:m,b:a:m,...")->required();
  tensor->callback([&] { cmd = Cmd::CheckTensor; });

  auto* tables = sub(app, "tables", "all S(b1,b2) for one type");
  tables->add_flag("--compare", o.compare, "compare with the published values");
  tables->callback([&] { cmd = Cmd::Tables; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    switch (cmd) {
      case Cmd::Cartan: return cmd_cartan(o, out);
      case Cmd::W0: return cmd_w0(o, out);
      case Cmd::BraidApply: return cmd_braid_apply(o, out);
      case Cmd::VerifyBraid: return cmd_verify_braid(o, out);
      case Cmd::SetsFund: return cmd_sets_fundamental(o, out);
      case Cmd::SetsKr: return cmd_sets_kr(o, out);
      case Cmd::CheckTensor: return cmd_check_tensor(o, out);
      case Cmd::Tables: return cmd_tables(o, out);
      case Cmd::None: break;
    }
    err << "error: incomplete command\n\n" << app.help();
    return 1;
  } catch (const Json::exception& e) {
    err << "error: invalid JSON: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace yangian::cli
