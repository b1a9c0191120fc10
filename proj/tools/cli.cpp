// Copyright 2026 The forensic-lucid Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <pthread.h>

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "flucid/desugar.hpp"
#include "flucid/evaluator.hpp"
#include "flucid/harness.hpp"
#include "flucid/parser.hpp"
#include "flucid/printer.hpp"

namespace flucid::cli {
namespace {

constexpr StreamIndex kDefaultStreamCap = 1000;
constexpr std::size_t kEvalStackBytes = std::size_t{1} << 30;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deep demand chains recurse through the evaluator, so evaluation runs on a
// thread with a large stack.
void run_with_large_stack(const std::function<void()>& fn) {
  struct Job {
    const std::function<void()>* fn;
    std::exception_ptr error;
  } job{&fn, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kEvalStackBytes);
  pthread_t thread;
  auto body = [](void* p) -> void* {
    auto* j = static_cast<Job*>(p);
    try {
      (*j->fn)();
    } catch (...) {
      j->error = std::current_exception();
    }
    return nullptr;
  };
  int rc = pthread_create(&thread, &attr, body, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    fn();
    return;
  }
  pthread_join(thread, nullptr);
  if (job.error) std::rethrow_exception(job.error);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(std::string_view text, const std::string& what) {
  std::string t = trim(text);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw UsageError("bad " + what + ": '" + t + "'");
  return v;
}

// "d=3,e=0" -> [d:3, e:0]
Context parse_bindings(std::string_view text) {
  Context ctx;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected name=tag, got '" + item + "'");
    std::string name = trim(item.substr(0, eq));
    if (name.empty()) throw UsageError("missing dimension name in '" + item + "'");
    ctx = ctx.with(name, parse_int(item.substr(eq + 1), "tag"));
  }
  return ctx;
}

std::pair<StreamIndex, StreamIndex> parse_window(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) throw UsageError("window must be lo..hi");
  StreamIndex lo = parse_int(text.substr(0, dots), "window bound");
  StreamIndex hi = parse_int(text.substr(dots + 2), "window bound");
  if (lo > hi) throw UsageError("window lo must not exceed hi");
  return {lo, hi};
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t depth_limit(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FLUCID_DEPTH")) {
    std::size_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return EvalOptions{}.max_nesting;
}

void print_trace(const Session& session, const std::string& format,
                 std::ostream& out) {
  if (format == "json")
    out << session.explain().to_json(2) << '\n';
  else
    out << session.explain().to_text();
}

struct RunArgs {
  std::string file;
  std::string expr;
  std::string ctx;
  std::string stream_dim;
  std::string window;
  bool trace = false;
  std::string trace_format = "text";
  std::optional<std::size_t> depth;
};

int cmd_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  std::string source;
  if (!a.expr.empty()) {
    source = a.expr;
  } else if (!a.file.empty()) {
    auto text = read_file(a.file);
    if (!text) {
      err << "flucid: cannot read " << a.file << '\n';
      return kExitUsage;
    }
    source = *text;
  } else {
    err << "flucid: run needs a file or -e EXPR\n";
    return kExitUsage;
  }

  Context ambient;
  std::optional<std::pair<StreamIndex, StreamIndex>> window;
  try {
    ambient = parse_bindings(a.ctx);
    if (!a.window.empty()) window = parse_window(a.window);
  } catch (const UsageError& e) {
    err << "flucid: " << e.what() << '\n';
    return kExitUsage;
  }
  if (window && a.stream_dim.empty()) {
    err << "flucid: --window needs --stream\n";
    return kExitUsage;
  }

  ExprPtr program;
  try {
    program = compile(source);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    return kExitUsage;
  }

  EvalOptions opts;
  opts.max_nesting = depth_limit(a.depth);
  opts.trace = a.trace;
  Session session(opts);
  std::string result;
  int status = kExitOk;
  run_with_large_stack([&] {
    try {
      if (a.stream_dim.empty()) {
        result = to_string(session.eval(program, ambient));
      } else if (window) {
        result = to_string(BoundedStream(session.eval_window(
            program, ambient, a.stream_dim, window->first, window->second)));
      } else {
        result = to_string(session.eval_stream(program, ambient, a.stream_dim,
                                               0, kDefaultStreamCap));
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      status = kExitEvalError;
    }
  });
  if (status == kExitOk) out << result << '\n';
  if (a.trace) print_trace(session, a.trace_format, out);
  return status;
}

struct CheckArgs {
  std::uint64_t seed = harness::Config{}.seed;
  int cases = harness::Config{}.cases;
  int max_len = harness::Config{}.max_len;
  std::string only;
  std::string fault;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  harness::Config cfg;
  cfg.seed = a.seed;
  cfg.cases = a.cases;
  cfg.max_len = a.max_len;
  if (!a.fault.empty()) {
    auto op = op_from_name(a.fault);
    if (!op) {
      err << "flucid: unknown operator '" << a.fault << "'\n";
      return kExitUsage;
    }
    cfg.impl = harness::Implementations::with_fault(*op);
  }
  harness::Report report;
  try {
    report = harness::run(cfg, a.only);
  } catch (const std::invalid_argument& e) {
    err << "flucid: " << e.what() << '\n';
    return kExitUsage;
  }
  out << report.to_text();
  out << report.results.size() << " properties, " << report.failures()
      << " failed (seed " << cfg.seed << ")\n";
  return report.passed() ? kExitOk : kExitEvalError;
}

int cmd_dump_ast(const std::string& file, bool desugared, std::ostream& out,
                 std::ostream& err) {
  auto text = read_file(file);
  if (!text) {
    err << "flucid: cannot read " << file << '\n';
    return kExitUsage;
  }
  try {
    ExprPtr e = desugared ? compile(*text) : parse(*text);
    out << dump_ast(*e);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

// Definitions accumulate across inputs; each expression is evaluated as
// `expr where <definitions> end` in a fresh session.
class Repl {
 public:
  Repl(std::ostream& out, std::ostream& err, std::size_t depth)
      : out_(out), err_(err), depth_(depth) {}

  int loop(std::istream& in, bool interactive) {
    std::string line;
    while (true) {
      if (interactive) out_ << "flucid> " << std::flush;
      if (!std::getline(in, line)) break;
      line = trim(line);
      if (line.empty()) continue;
      if (line[0] == ':') {
        if (!command(line)) break;
        continue;
      }
      input(line);
    }
    return kExitOk;
  }

 private:
  // Returns false to quit.
  bool command(const std::string& line) {
    std::string cmd = line;
    std::string arg;
    if (auto sp = line.find(' '); sp != std::string::npos) {
      cmd = line.substr(0, sp);
      arg = trim(line.substr(sp + 1));
    }
    if (cmd == ":q" || cmd == ":quit") return false;
    if (cmd == ":ctx") {
      if (arg.size() >= 2 && arg.front() == '[' && arg.back() == ']')
        arg = trim(arg.substr(1, arg.size() - 2));
      if (!arg.empty()) {
        try {
          ambient_ = ambient_.override_with(parse_bindings(arg));
        } catch (const UsageError& e) {
          err_ << "error: " << e.what() << '\n';
          return true;
        }
      }
      out_ << current_context().to_string() << '\n';
    } else if (cmd == ":trace") {
      if (arg == "on" || arg == "off")
        trace_ = arg == "on";
      else
        err_ << "error: use :trace on|off\n";
    } else if (cmd == ":defs") {
      for (const auto& d : defs_) out_ << print_def(*d) << ";\n";
    } else if (cmd == ":reset") {
      defs_.clear();
      ambient_ = {};
    } else {
      err_ << "error: unknown command " << cmd
           << " (:ctx [d=n,...], :trace on|off, :defs, :reset, :q)\n";
    }
    return true;
  }

  Context current_context() const {
    Context ctx = Session::initial_context();
    for (const auto& d : defs_)
      if (d->as<ast::DimDecl>()) ctx = ctx.with(d->name(), 0);
    return ctx.override_with(ambient_);
  }

  ExprPtr program_for(const ExprPtr& body,
                      const std::vector<QDefPtr>& defs) const {
    if (defs.empty()) return desugar(body);
    return desugar(make_expr(ast::Where{body, defs}));
  }

  void input(const std::string& line) {
    ReplInput parsed;
    std::vector<QDefPtr> defs = defs_;
    try {
      parsed = parse_repl_input(line);
      for (const auto& d : parsed.defs) {
        std::erase_if(defs, [&](const QDefPtr& old) { return old->name() == d->name(); });
        defs.push_back(d);
      }
      // Reject definitions that do not form a valid scope.
      program_for(make_int(0), defs);
    } catch (const SyntaxError& e) {
      err_ << "syntax error: " << e.what() << '\n';
      return;
    }
    defs_ = std::move(defs);
    if (!parsed.expr) return;

    ExprPtr program;
    try {
      program = program_for(parsed.expr, defs_);
    } catch (const SyntaxError& e) {
      err_ << "syntax error: " << e.what() << '\n';
      return;
    }
    EvalOptions opts;
    opts.max_nesting = depth_;
    opts.trace = trace_;
    Session session(opts);
    run_with_large_stack([&] {
      try {
        out_ << to_string(session.eval(program, ambient_)) << '\n';
      } catch (const std::exception& e) {
        err_ << "error: " << e.what() << '\n';
      }
    });
    if (trace_) out_ << session.explain().to_text();
  }

  std::ostream& out_;
  std::ostream& err_;
  std::size_t depth_;
  std::vector<QDefPtr> defs_;
  Context ambient_;
  bool trace_ = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err, bool interactive) {
  CLI::App app{"Interpreter and verification harness for Forensic Lucid programs",
               "flucid"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Evaluate a program");
  run->add_option("file", run_args.file, "Program file");
  run->add_option("-e,--expr", run_args.expr, "Inline program text");
  run->add_option("--ctx", run_args.ctx, "Ambient context, e.g. d=3,e=0");
  run->add_option("--stream", run_args.stream_dim,
                  "Print the stream along this dimension");
  run->add_option("--window", run_args.window,
                  "Half-open tag range lo..hi for --stream");
  run->add_flag("--trace", run_args.trace, "Print the derivation trace");
  run->add_option("--trace-format", run_args.trace_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  run->add_option("--depth", run_args.depth, "Maximum demand nesting")
      ->check(CLI::PositiveNumber);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run the operator property suites");
  check->add_option("--seed", check_args.seed, "Random seed");
  check->add_option("--cases", check_args.cases, "Cases per property")
      ->check(CLI::PositiveNumber);
  check->add_option("--max-len", check_args.max_len, "Maximum stream length")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--only", check_args.only, "Run one suite");
  check->add_option("--inject-fault", check_args.fault,
                    "Corrupt the indexed form of this operator");

  std::string ast_file;
  bool ast_desugar = false;
  auto* dump = app.add_subcommand("dump-ast", "Print the syntax tree");
  dump->add_option("file", ast_file, "Program file")->required();
  dump->add_flag("--desugar", ast_desugar, "Show the desugared tree");

  std::optional<std::size_t> repl_depth;
  auto* repl = app.add_subcommand("repl", "Interactive read-eval-print loop");
  repl->add_option("--depth", repl_depth, "Maximum demand nesting")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*run) {
    if (!run_args.file.empty() && !run_args.expr.empty()) {
      err << "flucid: give either a file or -e, not both\n";
      return kExitUsage;
    }
    return cmd_run(run_args, out, err);
  }
  if (*check) return cmd_check(check_args, out, err);
  if (*dump) return cmd_dump_ast(ast_file, ast_desugar, out, err);
  Repl r(out, err, depth_limit(repl_depth));
  return r.loop(in, interactive);
}

}  // namespace flucid::cli
