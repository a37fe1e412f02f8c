#include "catpascal/algebra.hpp"
#include "catpascal/errors.hpp"
#include "catpascal/graphs.hpp"
#include "catpascal/pascal.hpp"
#include "catpascal/registry.hpp"
#include "catpascal/series.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace catpascal;
using nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;
constexpr int kFailed = 1;

RootedGraph graph_from(const std::string& spec) {
  if (spec.rfind("rollet:", 0) == 0) return rollet_simple_graph(std::stoi(spec.substr(7)));
  return make_graph(spec);
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw InvalidSpec("bad integer list '" + s + "'");
    out.push_back(v);
  }
  return out;
}

void bfile(const std::vector<BigInt>& a) {
  for (std::size_t n = 0; n < a.size(); ++n) std::cout << n << '\t' << a[n] << '\n';
}

ordered_json json_ints(const std::vector<BigInt>& a) {
  auto j = ordered_json::array();
  for (auto& x : a) j.push_back(x.get_str());
  return j;
}

void check_cap(int n, int cap, const std::string& what) {
  if (n < 0) throw InvalidSpec("n must be non-negative");
  if (n > cap) throw InvalidSpec(what + " has enumeration cap " + std::to_string(cap));
}

std::vector<VertexLabel> vertices_of_layer(const RootedGraph& g, int n) {
  std::vector<VertexLabel> out;
  const auto table = layer_counts(g, n);
  for (auto& [v, c] : table.layer(n))
    if (c > 0) out.push_back(v);
  return out;
}

void print_element(const PascalFamily& f, const Element& e, bool json, bool render) {
  if (json)
    std::cout << to_json(e) << '\n';
  else if (render)
    std::cout << "[" << e.vertex.str() << "] " << e.payload << '\n' << f.render(e) << "\n\n";
  else
    std::cout << e.vertex.str() << '\t' << e.payload << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pascal arrays of Catalan sequences"};
  app.require_subcommand(1);

  std::string graph_spec, family_spec, sequence_spec, from_spec, to_spec, algebra_spec;
  std::string vertex_text, lambda_text;
  int m = 6, n = -1, ell = 0;
  long l0 = -1;
  bool json = false, render = false, serial = false, layers = false, squares = false;
  bool catalan_flag = false, det_only = false, join = false;
  bool bell_flag = false, h0_flag = false, h1_flag = false, h2_flag = false, sqrt_flag = false;
  std::vector<std::string> args;

  auto* count = app.add_subcommand("count", "walk counts on a rooted graph");
  count->add_option("--graph", graph_spec, "graph spec")->required();
  count->add_option("-m", m, "largest index")->check(CLI::NonNegativeNumber);
  count->add_flag("--catalan", catalan_flag, "closed walks N(2n; root) (default)");
  count->add_flag("--layers", layers, "every N(n; v) of the Pascal array");
  count->add_flag("--squares", squares, "sum over v of N(n; v)^2");
  count->add_flag("--json", json);

  auto* enumerate = app.add_subcommand("enumerate", "list a layer of a family or members of a sequence");
  auto* ef = enumerate->add_option("--family", family_spec);
  auto* es = enumerate->add_option("--sequence", sequence_spec);
  ef->excludes(es);
  enumerate->add_option("-n", n, "layer or size")->required();
  enumerate->add_option("--vertex", vertex_text);
  enumerate->add_flag("--json", json);
  enumerate->add_flag("--render", render, "ASCII diagrams");

  auto* verify = app.add_subcommand("verify", "exact-cover check of a family or bijection check of a sequence");
  auto* vf = verify->add_option("--family", family_spec);
  auto* vs = verify->add_option("--sequence", sequence_spec);
  vf->excludes(vs);
  verify->add_option("-n", n, "largest layer (default: the cap)");
  verify->add_flag("--serial", serial, "use the serial reference kernel");

  auto* transport_cmd = app.add_subcommand("transport", "carry an element to another family over the same graph");
  transport_cmd->add_option("--from", from_spec)->required();
  transport_cmd->add_option("--to", to_spec)->required();
  transport_cmd->add_option("payload", args)->required()->expected(1);
  transport_cmd->add_flag("--json", json);

  auto* decompose = app.add_subcommand("decompose", "split a member into its bra-ket pair, or join a pair");
  decompose->add_option("--sequence", sequence_spec)->required();
  decompose->add_option("-n", n)->required();
  decompose->add_flag("--join", join, "arguments are a bra and a ket payload");
  decompose->add_option("payloads", args)->required()->expected(1, 2);
  decompose->add_flag("--json", json);

  auto* multiply_cmd = app.add_subcommand("multiply", "product of two diagram-algebra elements");
  multiply_cmd->add_option("--algebra", algebra_spec)->required();
  multiply_cmd->add_option("-n", n)->required();
  multiply_cmd->add_option("operands", args)->required()->expected(2);

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of the Temperley-Lieb standard module");
  gram_cmd->add_option("-n", n)->required();
  gram_cmd->add_option("-l", ell, "propagating lines")->required();
  gram_cmd->add_flag("--det", det_only, "print only the determinant");

  auto* series = app.add_subcommand("series", "generating-function coefficients");
  auto* sl = series->add_option("--lambda", lambda_text, "H^lambda");
  series->add_flag("--bell", bell_flag);
  series->add_flag("--h0", h0_flag);
  series->add_flag("--h1", h1_flag);
  series->add_flag("--h2", h2_flag);
  series->add_flag("--sqrt", sqrt_flag, "sqrt(1 - 4x)");
  series->add_option("-m", m)->check(CLI::NonNegativeNumber);
  (void)sl;

  auto* simple = app.add_subcommand("simple-dims", "simple-module dimensions from restricted walks");
  simple->add_option("--algebra", algebra_spec, "tl or blob")->required();
  simple->add_option("-n", n)->required();
  simple->add_option("--ell", ell, "TL: the root-of-unity order l");
  simple->add_option("--l0", l0, "blob: the forbidden vertex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*count) {
      auto g = graph_from(graph_spec);
      if (layers) {
        auto t = layer_counts(g, m);
        ordered_json j = ordered_json::array();
        for (int k = 0; k <= m; ++k)
          for (auto& [v, c] : t.layer(k)) {
            if (json)
              j.push_back({{"n", k}, {"vertex", v.str()}, {"count", c.get_str()}});
            else
              std::cout << k << '\t' << v.str() << '\t' << c << '\n';
          }
        if (json) std::cout << j.dump() << '\n';
      } else {
        auto a = squares ? sum_of_squares(g, m) : catalan_numbers(g, m);
        if (json)
          std::cout << ordered_json{{"graph", g.descriptor()}, {squares ? "squares" : "catalan", json_ints(a)}}.dump()
                    << '\n';
        else
          bfile(a);
      }
      return 0;
    }

    if (*enumerate) {
      if (!family_spec.empty()) {
        auto f = make_family(family_spec);
        check_cap(n, f->cap(), f->id());
        std::vector<VertexLabel> vs;
        if (!vertex_text.empty())
          vs.push_back(parse_label(vertex_text, f->graph().label_kind()));
        else
          vs = vertices_of_layer(f->graph(), n);
        for (auto& v : vs)
          for (auto& e : f->layer(n, v)) print_element(*f, e, json, render);
      } else if (!sequence_spec.empty()) {
        auto s = make_sequence(sequence_spec);
        check_cap(n, s->cap(), s->id());
        for (auto& x : s->members(n)) {
          if (json)
            std::cout << ordered_json{{"sequence", s->id()}, {"n", n}, {"member", x}}.dump() << '\n';
          else if (render)
            std::cout << x << '\n' << s->render(n, x) << "\n\n";
          else
            std::cout << x << '\n';
        }
      } else {
        throw InvalidSpec("enumerate needs --family or --sequence");
      }
      return 0;
    }

    if (*verify) {
      if (!family_spec.empty()) {
        auto f = make_family(family_spec);
        if (n < 0) n = f->cap();
        check_cap(n, f->cap(), f->id());
        auto r = verify_family(*f, n, serial ? Exec::serial : Exec::parallel);
        std::cout << (r.ok() ? "OK" : "FAIL") << '\n' << r.table();
        return r.ok() ? 0 : kFailed;
      }
      if (!sequence_spec.empty()) {
        auto s = make_sequence(sequence_spec);
        if (n < 0) n = s->cap();
        check_cap(n, s->cap(), s->id());
        auto r = verify_catalan(*s, n);
        std::cout << (r.ok() ? "OK" : "FAIL") << '\n' << "n\tmembers\tpairs\tclosed\tstatus\n";
        for (auto& L : r.layers) {
          std::cout << L.n << '\t' << L.members << '\t' << L.pairs << '\t' << L.closed_walks << '\t'
                    << (L.ok() ? "ok" : "FAIL");
          if (L.witness) std::cout << "\twitness=" << *L.witness;
          std::cout << '\n';
        }
        return r.ok() ? 0 : kFailed;
      }
      throw InvalidSpec("verify needs --family or --sequence");
    }

    if (*transport_cmd) {
      auto f1 = make_family(from_spec);
      auto f2 = make_family(to_spec);
      auto y = transport(*f1, *f2, f1->make(args.at(0)));
      if (json)
        std::cout << to_json(y) << '\n';
      else
        std::cout << y.payload << '\n';
      return 0;
    }

    if (*decompose) {
      auto s = make_sequence(sequence_spec);
      check_cap(n, s->cap(), s->id());
      if (join) {
        if (args.size() != 2) throw InvalidSpec("--join takes a bra and a ket");
        auto x = catalan_compose(*s, n, s->bra().make(args[0]), s->ket().make(args[1]));
        if (json)
          std::cout << ordered_json{{"sequence", s->id()}, {"n", n}, {"member", x}}.dump() << '\n';
        else
          std::cout << x << '\n';
        return 0;
      }
      if (args.size() != 1) throw InvalidSpec("decompose takes one member");
      auto [a, b] = catalan_decompose(*s, n, args[0]);
      if (json)
        std::cout << ordered_json{{"bra", ordered_json::parse(to_json(a))}, {"ket", ordered_json::parse(to_json(b))}}
                         .dump()
                  << '\n';
      else
        std::cout << a.vertex.str() << '\t' << a.payload << '\t' << b.payload << '\n';
      return 0;
    }

    if (*multiply_cmd) {
      auto a = parse_algebra(algebra_spec);
      check_cap(n, a.cap(), a.id());
      auto x = parse_element(a, n, args.at(0));
      auto y = parse_element(a, n, args.at(1));
      std::cout << format_element(multiply(x, y), a.kind == AlgebraKind::tl) << '\n';
      return 0;
    }

    if (*gram_cmd) {
      check_cap(n, parse_algebra("tl").cap(), "tl");
      if (ell < 0 || ell > n || (n - ell) % 2) throw InvalidSpec("need 0 <= l <= n with n - l even");
      auto g = gram(n, ell);
      if (!det_only) {
        for (auto& row : g) {
          for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? "\t" : "") << row[k].str();
          std::cout << '\n';
        }
      }
      std::cout << (det_only ? "" : "det\t") << determinant(g).str() << '\n';
      return 0;
    }

    if (*series) {
      const int chosen = (bell_flag ? 1 : 0) + (h0_flag ? 1 : 0) + (h1_flag ? 1 : 0) + (h2_flag ? 1 : 0) +
                         (sqrt_flag ? 1 : 0) + (series->count("--lambda") ? 1 : 0);
      if (chosen != 1) throw InvalidSpec("series needs exactly one of --lambda, --bell, --h0, --h1, --h2, --sqrt");
      if (bell_flag) {
        bfile(series_bell_egf(m));
        return 0;
      }
      Series s = h0_flag     ? series_h0(m)
                 : h1_flag   ? series_h1(m)
                 : h2_flag   ? series_h2(m)
                 : sqrt_flag ? series_sqrt_1m4x(m)
                             : series_hlambda(int_list(lambda_text), m);
      bfile(s.integers());
      return 0;
    }

    if (*simple) {
      if (n < 0) throw InvalidSpec("n must be non-negative");
      bool agree = true;
      if (algebra_spec == "tl") {
        std::cout << "lambda\twalks\trollet\n";
        for (long lam = n % 2; lam <= n; lam += 2) {
          auto a = tl_simple_dim(n, lam, ell);
          auto b = tl_simple_dim_rollet(n, lam, ell);
          agree = agree && a == b;
          std::cout << lam << '\t' << a << '\t' << b << '\n';
        }
      } else if (algebra_spec == "blob") {
        std::cout << "lambda\twalks\tshifted\n";
        for (long lam = -n; lam <= n; lam += 2) {
          auto a = blob_simple_dim(n, lam, l0);
          auto b = blob_simple_dim_shifted(n, lam, l0);
          agree = agree && a == b;
          if (a != 0 || b != 0) std::cout << lam << '\t' << a << '\t' << b << '\n';
        }
      } else {
        throw InvalidSpec("simple-dims supports tl and blob");
      }
      return agree ? 0 : kFailed;
    }
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
