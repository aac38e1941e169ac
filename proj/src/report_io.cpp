#include "bergman/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "bergman/errors.hpp"
#include "json.hpp"

namespace bergman {

namespace {

using nlohmann::json;

// JSON has no infinity literal, and silently mapping it to null would
// drop the information, so non-finite values travel as strings.
json finite_or_label(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "infinity" : "-infinity";
}

json params_json(const OperatorParams& par) {
  json j;
  j["alpha"] = par.alpha;
  j["alpha_exact"] = par.alpha_exact ? json(par.alpha_exact->str()) : json(nullptr);
  j["d"] = par.d;
  return j;
}

json curve_json(const std::vector<CurvePoint>& curve) {
  json arr = json::array();
  for (const CurvePoint& c : curve) arr.push_back({c.parameter, c.value});
  return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct SvgFrame {
  // Plot box inside the 800x800 viewport; 1/q grows upward.
  double x(double u) const { return 70.0 + 700.0 * u; }
  double y(double v) const { return 730.0 - 700.0 * v; }
  std::string point(double u, double v) const { return num(x(u)) + "," + num(y(v)); }
};

}  // namespace

std::string verification_report_json(const VerificationReport& rep,
                                     const std::string& stamp) {
  json j;
  j["bound"] = {{"kind", rep.bound.kind},
                {"source", rep.bound.source},
                {"value", finite_or_label(rep.bound.value)}};
  j["curve"] = curve_json(rep.curve);
  j["exponents"] = {{"p", finite_or_label(rep.p)}, {"q", finite_or_label(rep.q)}};
  j["max_ratio"] = rep.max_ratio;
  j["n_trials"] = rep.n_trials;
  j["params"] = params_json(rep.params);
  j["seed"] = rep.seed;
  j["violations"] = rep.violations;
  if (!stamp.empty()) j["timestamp"] = stamp;
  return dump(j);
}

std::string growth_report_json(const GrowthReport& rep, const OperatorParams& params,
                               const ExponentPair& e, const std::string& stamp) {
  json j;
  j["exponents"] = {{"inv_p", e.ip.str()}, {"inv_q", e.iq.str()}};
  j["family"] = rep.family;
  j["growth"] = finite_or_label(rep.growth);
  j["params"] = params_json(params);
  json pts = json::array();
  for (const ProbePoint& pt : rep.points) {
    pts.push_back({{"image_norm", finite_or_label(pt.image_norm)},
                   {"image_settled", pt.image_settled},
                   {"input_norm", finite_or_label(pt.input_norm)},
                   {"input_settled", pt.input_settled},
                   {"ratio", finite_or_label(pt.ratio)},
                   {"t", pt.t},
                   {"truncation", pt.truncation}});
  }
  j["points"] = pts;
  j["verdict"] = rep.verdict;
  if (!stamp.empty()) j["timestamp"] = stamp;
  return dump(j);
}

std::string diagram_grid_csv(const OperatorParams& params, int resolution) {
  if (resolution < 1 || resolution > 1000)
    throw domain_error("diagram_grid_csv: resolution must be in [1, 1000]");
  std::string out = "inv_p,inv_q,bounded,compact,clause\r\n";
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; j <= resolution; ++j) {
      const ExponentPair e{Rat(i, resolution), Rat(j, resolution)};
      const Verdict v = classify(params, e);
      out += csv_field(e.ip.str());
      out += ',';
      out += csv_field(e.iq.str());
      out += ',';
      out += v.bounded ? "true" : "false";
      out += ',';
      out += v.compact ? "true" : "false";
      out += ',';
      out += csv_field(v.clause);
      out += "\r\n";
    }
  }
  return out;
}

std::string diagram_region_svg(const DiagramRegion& region) {
  const SvgFrame fr;
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
       "height=\"800\" viewBox=\"0 0 800 800\">\n";
  s += "  <defs>\n"
       "    <pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"12\" "
       "height=\"12\">\n"
       "      <path d=\"M0,12 L12,0\" stroke=\"#3a6ea5\" stroke-width=\"1\"/>\n"
       "    </pattern>\n"
       "  </defs>\n";
  s += "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

  if (!region.bounded_polygon.empty()) {
    std::string d = "M" + fr.point(region.bounded_polygon[0][0],
                                   region.bounded_polygon[0][1]);
    for (std::size_t k = 1; k < region.bounded_polygon.size(); ++k)
      d += " L" + fr.point(region.bounded_polygon[k][0], region.bounded_polygon[k][1]);
    d += " Z";
    s += "  <path d=\"" + d + "\" fill=\"#b8d4f0\" stroke=\"none\"/>\n";
    s += "  <path d=\"" + d + "\" fill=\"url(#hatch)\" stroke=\"none\"/>\n";
  }

  // Unit square and the anti-diagonal of the exponent square.
  s += "  <rect x=\"" + num(fr.x(0)) + "\" y=\"" + num(fr.y(1)) +
       "\" width=\"700.00\" height=\"700.00\" fill=\"none\" stroke=\"#222222\" "
       "stroke-width=\"2\"/>\n";
  s += "  <line x1=\"" + num(fr.x(0)) + "\" y1=\"" + num(fr.y(1)) + "\" x2=\"" +
       num(fr.x(1)) + "\" y2=\"" + num(fr.y(0)) +
       "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4,4\"/>\n";

  for (const DiagramSegment& seg : region.boundary) {
    std::string style;
    if (!seg.in_bounded) {
      style = " stroke-dasharray=\"8,6\"";
    } else if (!seg.in_compact) {
      style = " stroke-dasharray=\"1,5\" stroke-linecap=\"round\"";
    }
    s += "  <line x1=\"" + num(fr.x(seg.x0)) + "\" y1=\"" + num(fr.y(seg.y0)) +
         "\" x2=\"" + num(fr.x(seg.x1)) + "\" y2=\"" + num(fr.y(seg.y1)) +
         "\" stroke=\"#1a3a5c\" stroke-width=\"3\"" + style + ">\n    <title>" +
         seg.label + "</title>\n  </line>\n";
  }

  s += "  <text x=\"420\" y=\"778\" font-family=\"sans-serif\" font-size=\"24\" "
       "text-anchor=\"middle\">1/p</text>\n";
  s += "  <text x=\"24\" y=\"380\" font-family=\"sans-serif\" font-size=\"24\" "
       "text-anchor=\"middle\" transform=\"rotate(-90 24 380)\">1/q</text>\n";
  s += "  <text x=\"70\" y=\"755\" font-family=\"sans-serif\" font-size=\"18\" "
       "text-anchor=\"middle\">0</text>\n";
  s += "  <text x=\"770\" y=\"755\" font-family=\"sans-serif\" font-size=\"18\" "
       "text-anchor=\"middle\">1</text>\n";
  s += "  <text x=\"52\" y=\"36\" font-family=\"sans-serif\" font-size=\"18\" "
       "text-anchor=\"middle\">1</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace bergman
