#include "theta/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "theta/symplectic.hpp"

namespace theta::cli {

using suite::Json;
using suite::Report;
using suite::Status;

ParseError::ParseError(const std::string& message, std::size_t column)
    : std::runtime_error("column " + std::to_string(column) + ": " + message),
      column_(column) {}

// --- Word grammar -----------------------------------------------------------

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, int strands, bool theta_aliases)
      : text_(text), strands_(strands), theta_aliases_(theta_aliases) {}

  braid::BraidWord parse() {
    braid::BraidWord word = sequence();
    skip_space();
    if (pos_ < text_.size()) {
      throw ParseError(text_[pos_] == ')' ? "unbalanced parentheses"
                                          : "unexpected character",
                       pos_ + 1);
    }
    return word;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  braid::BraidWord sequence() {
    braid::BraidWord word(strands_);
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return word;
      word = word * atom();
    }
  }

  braid::BraidWord atom() {
    const std::size_t start = pos_;
    braid::BraidWord word(strands_);
    if (text_[pos_] == '(') {
      ++pos_;
      word = sequence();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("unbalanced parentheses", start + 1);
      }
      ++pos_;
    } else {
      word = generator();
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      word = word.power(exponent());
    }
    return word;
  }

  long exponent() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[end]))) {
      ++end;
    }
    const std::string digits(text_.substr(start, end - start));
    if (digits.empty() || digits == "-" || digits == "+") {
      throw ParseError("expected integer exponent after '^'", start + 1);
    }
    pos_ = end;
    try {
      return std::stol(digits);
    } catch (const std::out_of_range&) {
      throw ParseError("exponent out of range", start + 1);
    }
  }

  braid::BraidWord generator() {
    const std::size_t start = pos_;
    const char head = text_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(head))) {
      throw ParseError(std::string("bad token '") + head + "'", start + 1);
    }
    ++pos_;
    std::size_t end = pos_;
    while (end < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[end]))) {
      ++end;
    }
    const std::string digits(text_.substr(pos_, end - pos_));
    pos_ = end;
    const std::string token(text_.substr(start, end - start));

    int index = 0;
    bool inverse = false;
    const bool indexed_head = head == 's' || head == 'S' ||
                              (theta_aliases_ && (head == 'f' || head == 'F'));
    if (indexed_head && !digits.empty()) {
      try {
        index = std::stoi(digits);
      } catch (const std::out_of_range&) {
        throw ParseError("index out of range in '" + token + "'", start + 1);
      }
      inverse = head == 'S' || head == 'F';
    } else if (digits.empty() && strands_ == 4 &&
               std::string_view("abcABC").find(head) != std::string_view::npos) {
      index = std::tolower(static_cast<unsigned char>(head)) - 'a' + 1;
      inverse = std::isupper(static_cast<unsigned char>(head)) != 0;
    } else {
      throw ParseError("bad token '" + token + "'", start + 1);
    }
    if (index < 1 || index > strands_ - 1) {
      throw ParseError("index out of range in '" + token + "' for " +
                           std::to_string(strands_) + " strands",
                       start + 1);
    }
    return braid::BraidWord::generator(strands_, index, inverse);
  }

  std::string_view text_;
  int strands_;
  bool theta_aliases_;
  std::size_t pos_ = 0;
};

class MatrixParser {
 public:
  explicit MatrixParser(std::string_view text) : text_(text) {}

  sl2::UniMatrix2 parse() {
    expect('[');
    expect('[');
    Integer t1 = integer();
    expect(',');
    Integer t2 = integer();
    expect(']');
    expect(',');
    expect('[');
    Integer t3 = integer();
    expect(',');
    Integer t4 = integer();
    expect(']');
    expect(']');
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_ + 1);
    return sl2::UniMatrix2(t1, t2, t3, t4);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_ + 1);
    }
    ++pos_;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    const std::size_t digits_start = end;
    while (end < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[end]))) {
      ++end;
    }
    if (end == digits_start) throw ParseError("expected integer", start + 1);
    std::string digits(text_.substr(start, end - start));
    if (digits.front() == '+') digits.erase(0, 1);
    pos_ = end;
    return Integer(digits);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

braid::BraidWord parse_word(std::string_view text, int strands,
                            bool theta_aliases) {
  if (strands < 2) throw ParseError("strand count must be at least 2", 1);
  return WordParser(text, strands, theta_aliases).parse();
}

sl2::UniMatrix2 parse_matrix(std::string_view text) {
  return MatrixParser(text).parse();
}

// --- Report documents -------------------------------------------------------

Status ReportDocument::status() const {
  Status out = Status::Pass;
  for (const auto& report : experiments) out = suite::worst(out, report.status());
  return out;
}

int ReportDocument::exit_code() const {
  return status() == Status::Fail ? 1 : 0;
}

Json ReportDocument::to_json() const {
  Json records = Json::array();
  for (const auto& report : experiments) records.push_back(suite::to_json(report));
  return Json{{"schema_version", schema_version},
              {"status", suite::to_string(status())},
              {"experiments", std::move(records)}};
}

std::string ReportDocument::to_text() const {
  std::ostringstream os;
  for (const auto& report : experiments) {
    os << "== " << report.experiment << " [" << report.engine << "] "
       << report.params.dump() << '\n';
    for (const auto& check : report.checks) {
      std::string label = suite::to_string(check.status);
      for (auto& ch : label) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      os << "  " << label << std::string(14 - label.size(), ' ') << check.name
         << '\n';
    }
  }
  os << "status: " << suite::to_string(status()) << '\n';
  return os.str();
}

// --- Command line -----------------------------------------------------------

namespace {

const std::vector<std::string> kFormats = {"text", "json"};

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
}

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

Json form_to_json(const braid::CanonicalForm& form) {
  Json factors = Json::array();
  for (const auto& f : form.factors) factors.push_back(f.one_line());
  return Json{{"infimum", form.infimum}, {"factors", std::move(factors)}};
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

void emit(std::ostream& out, const Command& command, const Json& json,
          const std::string& text) {
  if (command.format == Format::Json) {
    out << json.dump(2) << '\n';
  } else {
    out << text;
  }
}

int emit_document(const Command& command, const ReportDocument& doc,
                  std::ostream& out, std::ostream& err) {
  if (command.output) {
    std::ofstream file(*command.output);
    if (!file) {
      err << "error: cannot open " << *command.output << " for writing\n";
      return 2;
    }
    file << doc.to_json().dump(2) << '\n';
  }
  emit(out, command, doc.to_json(), doc.to_text());
  return doc.exit_code();
}

Report matrix_report(const sl2::UniMatrix2& m, int power) {
  Report report;
  report.experiment = "sl2-reduce";
  report.params = Json{{"matrix", sl2::to_string(m)}, {"power", power}};
  report.engine = "sl2";
  const auto cls = sl2::classify(m);
  report.add("M^" + std::to_string(power) + " = -Id",
             m.power(power) == sl2::UniMatrix2::minus_identity(),
             Json{{"class", sl2::to_string(cls)}});
  if (cls.kind == sl2::Kind::Elliptic || cls.kind == sl2::Kind::MinusIdentity) {
    const auto cert = sl2::reduce_elliptic(m);
    report.add("C M C^-1 = canonical", cert.verify(),
               Json{{"canonical", suite::to_json(cert.canonical)},
                    {"conjugator", suite::to_json(cert.conjugator)},
                    {"conjugator_word",
                     sl2::to_ab_string(sl2::word_from_matrix(cert.conjugator))}});
  }
  return report;
}

ReportDocument full_suite() {
  ReportDocument doc;
  for (int n = 1; n <= 6; ++n) {
    doc.experiments.push_back(suite::hyperelliptic_experiment(n));
  }
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      doc.experiments.push_back(
          suite::check_relations(suite::SymplecticEngine{n, k}, n, k));
    }
  }
  for (int k = 1; k <= 3; ++k) {
    doc.experiments.push_back(
        suite::check_relations(suite::BraidEngine{2 * k + 2}, 3, k));
  }
  doc.experiments.push_back(suite::sl2_root_experiment(50));
  doc.experiments.push_back(suite::square_root_family(10));
  for (int k = 1; k <= 3; ++k) {
    doc.experiments.push_back(suite::separation_evidence(k));
  }
  return doc;
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
  Command command;
  std::string format = "text";

  CLI::App app{"Exact checks for braid quotients, symplectic images and "
               "SL2(Z) roots",
               "theta"};
  app.require_subcommand(1);

  auto* nf = app.add_subcommand("nf", "Garside left normal form of a braid word");
  nf->add_option("--n,--strands", command.strands, "Strand count")->required();
  nf->add_option("word", command.words, "Braid word")->required();
  add_format(nf, format);

  auto* eq = app.add_subcommand("eq", "Decide equality of two braid words");
  eq->add_option("--n,--strands", command.strands, "Strand count")->required();
  eq->add_flag("--mod-center", command.mod_center, "Compare in B_n/Z(B_n)");
  eq->add_option("words", command.words, "Two braid words")->expected(2)->required();
  add_format(eq, format);

  auto* roots = app.add_subcommand(
      "roots", "Census of roots of -Id in SL2(Z), or reduce one matrix");
  roots->add_option("--power", command.power)
      ->check(CLI::IsMember({2, 3}))
      ->capture_default_str();
  roots->add_option("--bound", command.bound)->capture_default_str();
  roots->add_option("--matrix", command.matrix, "Matrix [[t1,t2],[t3,t4]]");
  add_format(roots, format);

  auto* verify = app.add_subcommand("theta-verify",
                                    "Check the relators of Θ_n^k in an engine");
  verify->add_option("--n", command.n)->required();
  verify->add_option("--k", command.k)->required();
  verify->add_option("--engine", command.engine)
      ->check(CLI::IsMember({"symplectic", "braid"}))
      ->capture_default_str();
  add_format(verify, format);

  auto* theta_roots = app.add_subcommand(
      "theta-roots", "Roots of the hyperelliptic involution inside Θ_n^1");
  theta_roots->add_option("--n", command.n);
  theta_roots->add_option("--bound", command.bound)->capture_default_str();
  theta_roots->add_option("--m-max", command.m_max)->capture_default_str();
  add_format(theta_roots, format);

  auto* hyper = app.add_subcommand("hyperelliptic",
                                   "(f1 f2 f3)^2 as a hyperelliptic involution");
  hyper->add_option("--n", command.n)->required();
  add_format(hyper, format);

  auto* separation = app.add_subcommand("separation",
                                        "Evidence separating Θ_2^k from B_{2k+2}/Z");
  separation->add_option("--k", command.k)->required();
  add_format(separation, format);

  auto* report = app.add_subcommand("report", "Run the full experiment suite");
  report->add_option("--output", command.output, "Also write JSON to this file");
  add_format(report, format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    command.verb = "help";
    command.words = {app.help()};
    return command;
  } catch (const CLI::CallForAllHelp&) {
    command.verb = "help";
    command.words = {app.help("", CLI::AppFormatMode::All)};
    return command;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  command.verb = app.get_subcommands().front()->get_name();
  command.format = format == "json" ? Format::Json : Format::Text;

  if (command.verb == "nf" || command.verb == "eq") {
    require(*command.strands >= 2, "--n must be at least 2");
  } else if (command.verb == "roots") {
    require(command.bound >= 0, "--bound must be non-negative");
  } else if (command.verb == "theta-verify") {
    require(*command.n >= 1 && *command.k >= 1, "--n and --k must be >= 1");
  } else if (command.verb == "theta-roots") {
    require(!command.n || *command.n >= 1, "--n must be >= 1");
    require(command.bound >= 1, "--bound must be >= 1");
    require(command.m_max >= 0, "--m-max must be >= 0");
  } else if (command.verb == "hyperelliptic") {
    require(*command.n >= 1, "--n must be >= 1");
  } else if (command.verb == "separation") {
    require(*command.k >= 1, "--k must be >= 1");
  }
  return command;
}

int execute(const Command& command, std::ostream& out, std::ostream& err) {
  try {
    if (command.verb == "help") {
      out << command.words.front();
      return 0;
    }

    if (command.verb == "nf") {
      const int n = *command.strands;
      const auto word = parse_word(join_words(command.words), n, true);
      const auto form = braid::left_normal_form(word);
      emit(out, command,
           Json{{"schema_version", kSchemaVersion},
                {"experiment", "nf"},
                {"strands", n},
                {"word", braid::to_string(word)},
                {"normal_form", form_to_json(form)},
                {"text", braid::to_string(form)}},
           braid::to_string(form) + "\n");
      return 0;
    }

    if (command.verb == "eq") {
      const int n = *command.strands;
      const auto u = parse_word(command.words.at(0), n, true);
      const auto v = parse_word(command.words.at(1), n, true);
      const bool equal = command.mod_center ? braid::equals_mod_center(u, v)
                                            : braid::equals(u, v);
      emit(out, command,
           Json{{"schema_version", kSchemaVersion},
                {"experiment", "eq"},
                {"strands", n},
                {"mod_center", command.mod_center},
                {"equal", equal},
                {"lhs", braid::to_string(braid::left_normal_form(u))},
                {"rhs", braid::to_string(braid::left_normal_form(v))}},
           std::string(equal ? "true" : "false") + "\n");
      return equal ? 0 : 1;
    }

    ReportDocument doc;
    if (command.verb == "roots") {
      if (command.matrix) {
        doc.experiments.push_back(
            matrix_report(parse_matrix(*command.matrix), command.power));
      } else {
        const auto census = suite::root_census(command.power, command.bound);
        Report report;
        report.experiment = "sl2-root-census";
        report.params = Json{{"power", command.power}, {"bound", command.bound}};
        report.engine = "sl2";
        report.add("every root is classified", census.residue.empty(),
                   suite::to_json(census));
        doc.experiments.push_back(std::move(report));
      }
    } else if (command.verb == "theta-verify") {
      const int n = *command.n;
      const int k = *command.k;
      const suite::Engine engine =
          command.engine == "braid"
              ? suite::Engine{suite::BraidEngine{2 * k + 2}}
              : suite::Engine{suite::SymplecticEngine{n, k}};
      doc.experiments.push_back(suite::check_relations(engine, n, k));
    } else if (command.verb == "theta-roots") {
      if (!command.n || *command.n <= 2) {
        doc.experiments.push_back(suite::sl2_root_experiment(command.bound));
      }
      if (!command.n || *command.n >= 3) {
        doc.experiments.push_back(suite::square_root_family(command.m_max));
      }
    } else if (command.verb == "hyperelliptic") {
      doc.experiments.push_back(suite::hyperelliptic_experiment(*command.n));
    } else if (command.verb == "separation") {
      doc.experiments.push_back(suite::separation_evidence(*command.k));
    } else if (command.verb == "report") {
      doc = full_suite();
    } else {
      err << "error: unknown verb " << command.verb << '\n';
      return 2;
    }
    return emit_document(command, doc, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Command command;
  try {
    command = parse_command(args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return execute(command, out, err);
}

}  // namespace theta::cli
