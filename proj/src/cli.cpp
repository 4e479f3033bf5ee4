#include "dilat/cli.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "CLI11.hpp"
#include "dilat/charpoly.hpp"
#include "dilat/errors.hpp"
#include "dilat/families.hpp"
#include "dilat/fixtures.hpp"
#include "dilat/search.hpp"
#include "dilat/spectral.hpp"

namespace dilat {
namespace {

void print_report(const SearchReport& r, const std::string& format, std::ostream& out) {
  out << (format == "json" ? report_json(r) : report_table(r));
}

BigRational tolerance_from(double tol) {
  if (!(tol > 0)) throw RangeError("--tol must be positive");
  return BigRational(tol);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic polynomials, Perron roots and shape searches for multi-digraphs", "dilat"};
  app.require_subcommand(1, 1);

  std::string file, method = "ct";
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a digraph file");
  charpoly->add_option("file", file, "Digraph file")->required();
  charpoly->add_option("--method", method, "ct, oracle or both")
      ->check(CLI::IsMember({"ct", "oracle", "both"}));

  std::string poly_text;
  double tol = kDefaultTolerance;
  int digits = 5;
  auto* root = app.add_subcommand("root", "Certified largest real root >= 1");
  root->add_option("polynomial", poly_text, "Pretty or [coefficient,list] polynomial")->required();
  root->add_option("--tol", tol, "Bracket width");
  root->add_option("--digits", digits, "Fractional digits printed")->check(CLI::Range(0, 200));

  int d = 0, a = 0;
  auto* lt = app.add_subcommand("lt", "LT family polynomial");
  lt->add_option("d", d)->required();
  lt->add_option("a", a)->required();

  std::vector<int> c4_args;
  auto* c4 = app.add_subcommand("c4", "Complexity-4 family polynomial");
  c4->add_option("args", c4_args, "d a1 a2 a3 a4")->required()->expected(5);

  std::vector<int> s22_args;
  std::string emit = "poly";
  auto* shape22 = app.add_subcommand("shape22", "(2,2)-shape digraph or polynomial");
  shape22->add_option("args", s22_args, "a1 a2 p q")->required()->expected(4);
  shape22->add_option("--emit", emit)->check(CLI::IsMember({"digraph", "poly"}));

  int genus = 0;
  auto* bound = app.add_subcommand("bound", "Upper bound on the minimal dilatation in genus g");
  bound->add_option("g", genus)->required();

  std::string format = "table";
  int max_m = 0, k = 0;
  auto* verify = app.add_subcommand("verify", "Exhaustive case verification");
  verify->require_subcommand(1, 1);
  auto* verify_c2 = verify->add_subcommand("c2", "All complexity <= 2 digraphs");
  verify_c2->add_option("--max-m", max_m)->required();
  verify_c2->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  auto* verify_odd = verify->add_subcommand("odd", "Ring shapes with 2k+1 cycles");
  verify_odd->add_option("--k", k)->required();
  verify_odd->add_option("--max-m", max_m)->required();
  verify_odd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  int shape_n = 0, shape_c = 0;
  auto* count = app.add_subcommand("count", "Isomorphism classes of (n,c)-shapes realizing a polynomial");
  count->add_option("polynomial", poly_text)->required();
  count->add_option("--n", shape_n)->required();
  count->add_option("--c", shape_c)->required();

  int max_c = 0, jobs = 1;
  int search_max_m = 64;
  auto* search = app.add_subcommand("search", "Candidate polynomials below the genus bound");
  search->add_option("--genus", genus)->required();
  search->add_option("--max-c", max_c)->required();
  search->add_option("--max-m", search_max_m);
  search->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  search->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  std::string fixture_name;
  auto* fixture = app.add_subcommand("fixture", "Print a stored digraph");
  fixture->add_option("name", fixture_name)->required();

  auto* hamsong = app.add_subcommand("hamsong", "Check complexity <= lambda^m - 1");
  hamsong->add_option("file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*charpoly) {
      const MultiDigraph g = read_digraph_file(file);
      if (method == "ct") {
        out << to_string(char_poly_ct(g)) << "\n";
      } else if (method == "oracle") {
        out << to_string(char_poly_oracle(g)) << "\n";
      } else {
        const auto p = char_poly_ct(g);
        const auto q = char_poly_oracle(g);
        if (p != q) {
          err << "error: Mismatch: cycle census gives " << to_string(p) << ", determinant gives "
              << to_string(q) << "\n";
          return 1;
        }
        out << to_string(p) << "\n";
      }
    } else if (*root) {
      const auto r = largest_real_root(parse_polynomial(poly_text), tolerance_from(tol));
      out << r.decimal(digits) << "\n";
    } else if (*lt) {
      out << to_string(lt_polynomial(d, a)) << "\n";
    } else if (*c4) {
      out << to_string(c4_polynomial(c4_args[0], {c4_args[1], c4_args[2], c4_args[3], c4_args[4]})) << "\n";
    } else if (*shape22) {
      const int a1 = s22_args[0], a2 = s22_args[1], p = s22_args[2], q = s22_args[3];
      const MultiDigraph g = build_shape_22(a1, a2, p, q);
      if (emit == "digraph")
        out << format_digraph(g, {"shape22 a1=" + std::to_string(a1) + " a2=" + std::to_string(a2) +
                                  " p=" + std::to_string(p) + " q=" + std::to_string(q)});
      else
        out << to_string(shape22_polynomial(a1, a2, p + q)) << "\n";
    } else if (*bound) {
      const auto b = hironaka_bound(genus);
      out << "g=" << b.g << " d=" << b.d << " a=" << b.a << " polynomial=" << to_string(lt_polynomial(b.d, b.a))
          << " bound=" << b.bound.decimal(10) << "\n";
    } else if (*verify_c2) {
      print_report(verify_case_c_le_2(max_m), format, out);
    } else if (*verify_odd) {
      print_report(verify_case_odd_diagonal(k, max_m), format, out);
    } else if (*count) {
      out << count_realizations(parse_polynomial(poly_text), shape_n, shape_c) << "\n";
    } else if (*search) {
      print_report(genus_candidates(genus, max_c, search_max_m, jobs), format, out);
    } else if (*fixture) {
      out << fixture_text(fixture_name);
    } else if (*hamsong) {
      const MultiDigraph g = read_digraph_file(file);
      const auto lambda = pf_eigenvalue(g);
      const bool holds = ham_song_check(g);
      out << "m=" << g.vertex_count() << " c=" << complexity(g) << " lambda=" << lambda.decimal(10) << " "
          << (holds ? "holds" : "violated") << "\n";
      return holds ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace dilat
