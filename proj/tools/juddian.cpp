// juddian: exact isolated solutions of the Rabi Hamiltonian and their
// numerical cross-checks.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "juddian/commands.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw juddian::error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs body against the --out file (or stdout). Output is buffered so a
// failing command leaves no partial file behind.
template <class Body>
int with_output(const std::string& path, Body&& body) {
  std::ostringstream buf;
  const int status = body(static_cast<std::ostream&>(buf));
  if (path.empty() || path == "-") {
    std::cout << buf.str();
    std::cout.flush();
    return status;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw juddian::error("cannot open '" + path + "' for writing");
  out << buf.str();
  out.close();
  if (!out) throw juddian::error("failed writing '" + path + "'");
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace juddian::cli;

  CLI::App app{"Juddian (isolated exact) solutions of the Rabi Hamiltonian"};
  app.require_subcommand(1);

  std::string out_path;

  juddian_args jd;
  std::string jd_format = "csv";
  auto* juddian_cmd = app.add_subcommand("juddian", "Juddian points for N = 1..max-n");
  juddian_cmd->add_option("--max-n", jd.max_n, "highest Ansatz order")->check(CLI::PositiveNumber);
  juddian_cmd->add_option("--omega", jd.omega, "mode frequency");
  juddian_cmd->add_option("--omega0", jd.omega0, "atomic splitting");
  juddian_cmd->add_option("--format", jd_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  juddian_cmd->add_option("--out", out_path, "output file (default stdout)");

  spectrum_args sp;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "lowest levels per parity over a coupling grid");
  spectrum_cmd->add_option("--g-min", sp.g_min, "first coupling");
  spectrum_cmd->add_option("--g-max", sp.g_max, "last coupling");
  spectrum_cmd->add_option("--g-steps", sp.g_steps, "number of grid points");
  spectrum_cmd->add_option("--cutoff", sp.cutoff, "highest retained boson number M");
  spectrum_cmd->add_option("--levels", sp.levels, "levels per parity block");
  spectrum_cmd->add_option("--omega", sp.omega, "mode frequency");
  spectrum_cmd->add_option("--omega0", sp.omega0, "atomic splitting");
  spectrum_cmd->add_flag("--unscaled", sp.unscaled, "report eigenvalues of H rather than H/omega");
  spectrum_cmd->add_option("--out", out_path, "output file (default stdout)");

  verify_args vf;
  auto* verify_cmd = app.add_subcommand("verify", "check Juddian points of order n against diagonalization");
  verify_cmd->add_option("--n", vf.n, "Ansatz order")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--cutoff", vf.cutoff, "highest retained boson number M");
  verify_cmd->add_option("--omega", vf.omega, "mode frequency");
  verify_cmd->add_option("--omega0", vf.omega0, "atomic splitting");
  verify_cmd->add_option("--out", out_path, "output file (default stdout)");

  oscillator_args os;
  std::string os_type = "displaced";
  auto* osc_cmd = app.add_subcommand("oscillator", "displaced or squeezed oscillator against its exact spectrum");
  osc_cmd->add_option("--type", os_type, "displaced or squeezed")->check(CLI::IsMember({"displaced", "squeezed"}));
  osc_cmd->add_option("--lambda", os.lambda, "coupling");
  osc_cmd->add_option("--cutoff", os.cutoff, "highest retained boson number M");
  osc_cmd->add_option("--levels", os.levels, "number of levels compared");
  osc_cmd->add_option("--out", out_path, "output file (default stdout)");

  std::string spectrum_path, points_path, baselines = "on";
  auto* plot_cmd = app.add_subcommand("plot", "SVG energy diagram from spectrum CSV and points JSON");
  plot_cmd->add_option("--spectrum", spectrum_path, "spectrum CSV")->required();
  plot_cmd->add_option("--points", points_path, "Juddian points JSON");
  plot_cmd->add_option("--baselines", baselines, "on or off")->check(CLI::IsMember({"on", "off"}));
  plot_cmd->add_option("--out", out_path, "output SVG (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (juddian_cmd->parsed()) {
      jd.format = jd_format == "json" ? output_format::json : output_format::csv;
      return with_output(out_path, [&](std::ostream& o) { return cmd_juddian(jd, o, std::cerr); });
    }
    if (spectrum_cmd->parsed())
      return with_output(out_path, [&](std::ostream& o) { return cmd_spectrum(sp, o, std::cerr); });
    if (verify_cmd->parsed())
      return with_output(out_path, [&](std::ostream& o) { return cmd_verify(vf, o, std::cerr); });
    if (osc_cmd->parsed()) {
      os.type = os_type == "squeezed" ? oscillator_type::squeezed : oscillator_type::displaced;
      return with_output(out_path, [&](std::ostream& o) { return cmd_oscillator(os, o, std::cerr); });
    }
    if (plot_cmd->parsed()) {
      plot_args pa;
      pa.spectrum_text = slurp(spectrum_path);
      if (!points_path.empty()) pa.points_text = slurp(points_path);
      pa.baselines = baselines == "on";
      return with_output(out_path, [&](std::ostream& o) { return cmd_plot(pa, o, std::cerr); });
    }
  } catch (const juddian::parse_error& e) {
    std::cerr << "error: malformed input, " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
