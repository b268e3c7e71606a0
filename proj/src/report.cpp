#include <cmath>
#include <cstdio>
#include <string>

#include "dunkl/verify.hpp"

namespace dunkl {

namespace {

class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const std::string& k) {
    separator();
    string(k);
    out_ += ": ";
    after_key_ = true;
  }

  void value(double v) {
    separator();
    if (!std::isfinite(v)) {
      out_ += "null";
      return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out_ += buf;
  }
  void value(int v) {
    separator();
    out_ += std::to_string(v);
  }
  void value(std::uint64_t v) {
    separator();
    out_ += std::to_string(v);
  }
  void value(bool v) {
    separator();
    out_ += v ? "true" : "false";
  }
  void value(const std::string& v) {
    separator();
    string(v);
  }
  void value(const char* v) { value(std::string(v)); }

  template <class T>
  void field(const std::string& k, const T& v) {
    key(k);
    value(v);
  }

 private:
  void open(char c) {
    separator();
    out_ += c;
    ++depth_;
    first_ = true;
  }
  void close(char c) {
    --depth_;
    if (!first_) newline();
    out_ += c;
    first_ = false;
  }
  void newline() {
    out_ += '\n';
    out_.append(static_cast<std::size_t>(2 * depth_), ' ');
  }
  void separator() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (depth_ == 0) return;
    if (!first_) out_ += ',';
    newline();
    first_ = false;
  }
  void string(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  int depth_ = 0;
  bool first_ = true;
  bool after_key_ = false;
};

void write_config(JsonWriter& w, const SuiteConfig& c) {
  w.key("config");
  w.begin_object();
  w.key("kappas");
  w.begin_array();
  for (double k : c.kappas) w.value(k);
  w.end_array();
  w.field("half_width", c.half_width);
  w.field("nodes", c.nodes);
  w.key("radii");
  w.begin_array();
  for (double r : c.radii()) w.value(r);
  w.end_array();
  w.key("exponents");
  w.begin_array();
  for (const auto& t : c.exponents) w.value(t.str());
  w.end_array();
  w.key("family");
  w.begin_array();
  for (const auto& m : c.family) w.value(m.label());
  w.end_array();
  w.key("tolerances");
  w.begin_object();
  w.field("inequality", c.tolerances.inequality);
  w.field("comparison", c.tolerances.comparison);
  w.field("stability", c.tolerances.stability);
  w.field("triangle", c.tolerances.triangle);
  w.field("homogeneity", c.tolerances.homogeneity);
  w.field("linfty_identity", c.tolerances.linfty_identity);
  w.field("exact", c.tolerances.exact);
  w.field("classical_maximal", c.tolerances.classical_maximal);
  w.end_object();
  w.field("seed", c.seed);
  w.field("refine", c.refine);
  w.end_object();
}

void write_payload(JsonWriter& w, const VerificationReport& r) {
  w.field("suite", r.suite);
  write_config(w, r.config);
  w.key("cases");
  w.begin_array();
  for (const auto& c : r.cases) {
    w.begin_object();
    w.field("suite", c.suite);
    w.field("statement", c.statement);
    w.field("description", c.description);
    w.key("inputs");
    w.begin_object();
    for (const auto& [k, v] : c.inputs) {
      w.key(k);
      if (const auto* d = std::get_if<double>(&v))
        w.value(*d);
      else
        w.value(std::get<std::string>(v));
    }
    w.end_object();
    w.field("kind", c.kind);
    w.field("lhs", c.lhs);
    w.field("rhs", c.rhs);
    w.field("bound", c.bound);
    w.field("ratio", c.ratio);
    w.field("slack", c.slack);
    w.field("pass", c.pass);
    w.end_object();
  }
  w.end_array();
  w.key("constants");
  w.begin_array();
  for (const auto& k : r.constants) {
    w.begin_object();
    w.field("statement", k.statement);
    w.field("kappa", k.kappa);
    w.field("label", k.label);
    w.field("fine", k.fine);
    w.field("coarse", k.coarse);
    w.end_object();
  }
  w.end_array();
  w.key("summary");
  w.begin_object();
  w.field("cases", static_cast<int>(r.cases.size()));
  w.field("failures", r.failures());
  w.field("max_ratio", r.max_ratio());
  w.key("statements");
  w.begin_array();
  for (const auto& s : r.statements()) w.value(s);
  w.end_array();
  w.end_object();
}

}  // namespace

std::string VerificationReport::payload_json() const {
  JsonWriter w;
  w.begin_object();
  write_payload(w, *this);
  w.end_object();
  return w.take() + "\n";
}

std::string VerificationReport::to_json() const {
  JsonWriter w;
  w.begin_object();
  write_payload(w, *this);
  w.key("timing");
  w.begin_object();
  w.field("seconds", seconds);
  w.end_object();
  w.end_object();
  return w.take() + "\n";
}

}  // namespace dunkl
