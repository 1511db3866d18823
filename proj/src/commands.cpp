#include "placeone/commands.hpp"

#include <chrono>
#include <condition_variable>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "placeone/oracle.hpp"
#include "placeone/parse.hpp"

namespace placeone {

namespace {

using Clock = std::chrono::steady_clock;

Json envelope(const std::string& command, Json input, const CommandOptions& opt, Json result, Clock::time_point t0) {
  Json e = Json::object();
  e["tool"] = kToolName;
  e["version"] = kToolVersion;
  e["command"] = command;
  e["input"] = std::move(input);
  e["seed"] = opt.engine.seed;
  e["result"] = std::move(result);
  if (opt.timing)
    e["timing"] = Json{{"total_ms", std::chrono::duration<double, std::milli>(Clock::now() - t0).count()}};
  else
    e["timing"] = nullptr;
  return e;
}

Json error_json(const char* kind, const std::exception& e) { return Json{{"error", {{"kind", kind}, {"message", e.what()}}}}; }

// Runs body(), mapping engine exceptions to exit codes. body returns the
// result payload and whether a checked statement failed.
template <class Body>
CommandResult guarded(const std::string& command, Json input, const CommandOptions& opt, Body body) {
  const auto t0 = Clock::now();
  CommandResult out;
  Json result;
  try {
    auto [payload, violated] = body();
    result = std::move(payload);
    out.exit_code = violated ? exit_violation : exit_ok;
  } catch (const ResourceCapError& e) {
    result = error_json("resource_cap", e);
    out.exit_code = exit_cap;
  } catch (const InternalError& e) {
    result = error_json("internal", e);
    out.exit_code = exit_violation;
  } catch (const InputError& e) {
    result = error_json("input", e);
    out.exit_code = exit_input;
  } catch (const Error& e) {
    result = error_json("input", e);
    out.exit_code = exit_input;
  }
  out.envelope = envelope(command, std::move(input), opt, std::move(result), t0);
  return out;
}

AnalyzeRecord analyze_record(const PencilAnalysis& a, const EngineOptions& opt) {
  AnalyzeRecord r;
  r.normal_form = make_record(a.data.curve);
  r.mu = a.mu;
  r.one_place = a.one_place;
  r.r_inf = a.r_inf;
  r.mu_inf = a.mu_inf;
  const FiberReport self = fiber_at(a, Rational(0), opt);
  r.A_member = self.A_member;
  for (const auto& s : self.singular) r.critical_points.push_back(make_record(s));
  r.curve = make_record(self);
  for (const auto& fr : a.critical) r.critical_fibers.push_back(make_record(fr));
  r.generic = make_record(a.generic);
  r.identity = make_record(a.identity);
  r.violations = a.violations;
  return r;
}

}  // namespace

CommandResult cmd_analyze(const std::string& input, const CommandOptions& opt) {
  return guarded("analyze", Json{{"f", input}}, opt, [&] {
    const CurveNormalForm c = normalize(parse_curve(input), opt.engine.seed);
    const PencilAnalysis a = analyze_pencil(c, opt.engine);
    const AnalyzeRecord r = analyze_record(a, opt.engine);
    return std::pair{Json(r), !r.violations.empty()};
  });
}

CommandResult cmd_pencil(const std::string& input, const CommandOptions& opt) {
  return guarded("pencil", Json{{"f", input}}, opt, [&] {
    const CurveNormalForm c = normalize(parse_curve(input), opt.engine.seed);
    const PencilAnalysis a = analyze_pencil(c, opt.engine);
    PencilReportRecord r;
    r.normal_form = make_record(c);
    r.pencil = make_record(a.data);
    r.mu = a.mu;
    r.one_place = a.one_place;
    r.identity = make_record(a.identity);
    for (const auto& fr : a.critical) r.critical_fibers.push_back(make_record(fr));
    r.generic = make_record(a.generic);
    r.violations = a.violations;
    return std::pair{Json(r), !r.violations.empty()};
  });
}

CommandResult cmd_census(const std::string& input, const CommandOptions& opt) {
  CommandResult out = guarded("census", Json{{"f", input}}, opt, [&] {
    const CurveNormalForm c = normalize(parse_curve(input), opt.engine.seed);
    const PencilAnalysis a = analyze_pencil(c, opt.engine);
    const CensusRecord r = make_record(rational_census(a), a);
    return std::pair{Json(r), !r.violations.empty()};
  });
  // The census is defined for curves with one place at infinity only.
  const Json& res = out.envelope["result"];
  if (out.exit_code == exit_ok && res.contains("kind") && res["kind"] == to_string(CensusCase::not_applicable))
    out.exit_code = exit_input;
  return out;
}

CommandResult cmd_implicitize(const std::string& xt, const std::string& yt, const CommandOptions& opt) {
  return guarded("implicitize", Json{{"x", xt}, {"y", yt}}, opt, [&] {
    ImplicitizeRecord r;
    r.x_of_t = parse_univariate(xt, "t");
    r.y_of_t = parse_univariate(yt, "t");
    r.parametrization_degree = parametrization_degree(r.x_of_t, r.y_of_t);
    r.normal_form = make_record(implicitize(r.x_of_t, r.y_of_t));
    return std::pair{Json(r), false};
  });
}

CommandResult cmd_pair(const std::string& f, const std::string& g, const CommandOptions& opt) {
  return guarded("pair", Json{{"f", f}, {"g", g}}, opt, [&] {
    const QBiPoly F = parse_curve(f), G = parse_curve(g);
    const PairRecord r = make_record(classify_pair(F, G, opt.engine), F, G);
    return std::pair{Json(r), !r.violations.empty()};
  });
}

CommandResult cmd_lemma(const std::string& H, const CommandOptions& opt) {
  return guarded("lemma", Json{{"H", H}}, opt, [&] {
    const QBiPoly h = parse_curve(H);
    const LemmaRecord r = make_record(local_bounds_check(h, opt.engine), h);
    return std::pair{Json(r), !(r.bound_ok && r.strict_ok && r.coords_ok)};
  });
}

namespace {

// f scaled to be monic in y, when its leading y-coefficient is a constant.
std::optional<QBiPoly> monic_in_y(const QBiPoly& f) {
  if (f.is_zero() || f.lead().degree() != 0) return std::nullopt;
  return f.scale(QPoly(Rational(1) / f.lead().lead()));
}

}  // namespace

CommandResult cmd_verify(const std::string& f, const std::string& g,
                         const std::optional<std::pair<std::string, std::string>>& at, const CommandOptions& opt) {
  Json input{{"f", f}, {"g", g}};
  if (at) input["at"] = Json::array({at->first, at->second});
  return guarded("verify", std::move(input), opt, [&] {
    VerifyRecord r;
    r.f = parse_curve(f);
    r.g = parse_curve(g);
    if (r.f.is_zero() || r.g.is_zero()) throw InputError("verify: zero polynomial");
    if (total_degree(gcd(r.f, r.g)) > 0) throw InputError("verify: f and g share a component");

    if (auto m = monic_in_y(r.f)) {
      r.global = global_int(*m, r.g);
      r.global_oracle = quotient_dim_global(*m, r.g);
    } else if (auto m2 = monic_in_y(r.g)) {
      r.global = global_int(*m2, r.f);
      r.global_oracle = quotient_dim_global(*m2, r.f);
    }
    if (r.global && *r.global != *r.global_oracle)
      r.violations.push_back("global count " + std::to_string(*r.global) + " but oracle " +
                             std::to_string(*r.global_oracle));

    std::vector<std::pair<Rational, Rational>> pts;
    if (at) {
      pts.emplace_back(rational_from_string(at->first), rational_from_string(at->second));
    } else {
      const QPoly res = resultant_y(r.f, r.g);
      const std::vector<Rational> xs = rational_roots(res);
      r.all_points_rational = squarefree_part(res).degree() == static_cast<int>(xs.size());
      for (const Rational& a : xs) {
        const QPoly h = gcd(eval_inner(r.f, a), eval_inner(r.g, a));
        const std::vector<Rational> ys = rational_roots(h);
        if (squarefree_part(h).degree() != static_cast<int>(ys.size())) r.all_points_rational = false;
        for (const Rational& b : ys) pts.emplace_back(a, b);
      }
    }
    for (const auto& [a, b] : pts) {
      const PointClass p = rational_point(a, b, opt.engine);
      VerifyPointRecord v{a, b, local_int(r.f, r.g, p, opt.engine), quotient_dim_local(r.f, r.g, a, b),
                          local_int_by_branches(r.f, r.g, p, opt.engine)};
      const std::string where = "(" + to_string(a) + ", " + to_string(b) + ")";
      if (v.local != v.oracle)
        r.violations.push_back("at " + where + " local " + std::to_string(v.local) + " but oracle " +
                               std::to_string(v.oracle));
      if (v.local != v.branches)
        r.violations.push_back("at " + where + " local " + std::to_string(v.local) + " but branch sum " +
                               std::to_string(v.branches));
      r.local_sum += v.local;
      r.points.push_back(v);
    }
    if (r.global && !at && (r.local_sum > *r.global || (r.all_points_rational && r.local_sum != *r.global)))
      r.violations.push_back("local sum " + std::to_string(r.local_sum) + " against global " +
                             std::to_string(*r.global));
    return std::pair{Json(r), !r.violations.empty()};
  });
}

// ---------------------------------------------------------------------------
// Corpus

CorpusCandidate corpus_candidate(const CorpusSpec& spec, long k) {
  if (spec.a_min < 2 || spec.a_max < spec.a_min) throw InputError("corpus: need 2 <= a_min <= a_max");
  if (spec.coeff_bound < 0) throw InputError("corpus: negative coefficient bound");
  std::seed_seq seq{spec.seed, static_cast<unsigned>(k), static_cast<unsigned>(static_cast<unsigned long>(k) >> 32)};
  std::mt19937_64 rng(seq);
  CorpusCandidate c;
  c.candidate = k;
  c.a = spec.a_min + static_cast<int>(rng() % static_cast<unsigned long>(spec.a_max - spec.a_min + 1));
  std::vector<int> bs;
  for (int b = 1; b < c.a; ++b)
    if (std::gcd(c.a, b) == 1) bs.push_back(b);
  c.b = bs[rng() % bs.size()];
  const auto width = static_cast<unsigned long>(2 * spec.coeff_bound + 1);
  auto draw = [&](int deg) {
    std::vector<Rational> v(static_cast<std::size_t>(deg + 1));
    for (int i = 0; i < deg; ++i) v[static_cast<std::size_t>(i)] = static_cast<long>(rng() % width) - spec.coeff_bound;
    v[static_cast<std::size_t>(deg)] = 1;
    return QPoly(std::move(v));
  };
  c.x_of_t = draw(c.a);
  c.y_of_t = draw(c.b);
  return c;
}

std::optional<CorpusMemberRecord> corpus_member(const CorpusCandidate& cand, const EngineOptions& opt) {
  CurveNormalForm c;
  try {
    c = implicitize(cand.x_of_t, cand.y_of_t);
  } catch (const InputError&) {
    return std::nullopt;  // not a proper parametrization
  }
  if (!c.degree_condition_holds || r_infinity(c) != 1) return std::nullopt;

  const PencilAnalysis a = analyze_pencil(c, opt);
  const CensusRecord census = make_record(rational_census(a), a);
  CorpusMemberRecord m;
  m.candidate = cand.candidate;
  m.a = cand.a;
  m.b = cand.b;
  m.x_of_t = cand.x_of_t;
  m.y_of_t = cand.y_of_t;
  m.f = c.f;
  m.n = c.n;
  m.mu = a.mu;
  m.r_inf = a.r_inf;
  m.mu_inf = a.mu_inf;
  m.d_regular = a.data.d_regular;
  m.A_f = a.data.A_f;
  m.identity_ok = a.identity.ok;
  m.bezout_ok = a.mu_inf && a.mu + *a.mu_inf == (c.n - 1) * (c.n - 2);
  m.star_ok = a.generic.star_ok;
  for (const auto& fr : a.critical) m.star_ok = m.star_ok && fr.star_ok;
  m.generic_genus = a.generic.genus;
  m.census = census.kind;
  m.rational_count = census.rational_count;
  m.rational_lambdas = census.rational_lambdas;
  m.violations = census.violations;
  if (m.A_f != 0) m.violations.push_back("corpus member has A(f) = " + std::to_string(m.A_f));
  if (!m.bezout_ok) m.violations.push_back("mu + mu_inf != (n-1)(n-2)");
  if (!m.generic_genus || *m.generic_genus < 0) m.violations.push_back("generic genus not a nonnegative integer");
  return m;
}

CorpusResult cmd_corpus(const CorpusSpec& spec, const CommandOptions& opt,
                        const std::function<void(const Json&)>& emit) {
  const auto t0 = Clock::now();
  const Json input{{"a_min", spec.a_min}, {"a_max", spec.a_max}, {"coeff_bound", spec.coeff_bound},
                   {"count", spec.count}};
  CommandOptions env_opt = opt;
  env_opt.engine.seed = spec.seed;
  CorpusResult res;

  // Candidates are claimed in order by the workers; results are consumed in
  // candidate order, so the output does not depend on the number of jobs.
  struct Slot {
    bool done = false;
    std::optional<CorpusMemberRecord> member;
    std::optional<std::pair<std::string, std::string>> error;  // kind, message
  };
  std::mutex mtx;
  std::condition_variable cv;
  std::map<long, Slot> slots;
  long next = 0;
  long allowed = spec.count;  // candidates beyond this cannot be needed yet
  bool stop = false;

  auto worker = [&] {
    for (;;) {
      long k;
      {
        std::unique_lock<std::mutex> lock(mtx);
        cv.wait(lock, [&] { return stop || next < allowed; });
        if (stop) return;
        k = next++;
      }
      Slot s;
      try {
        s.member = corpus_member(corpus_candidate(spec, k), opt.engine);
      } catch (const ResourceCapError& e) {
        s.error = {"resource_cap", e.what()};
      } catch (const std::exception& e) {
        s.error = {"internal", e.what()};
      }
      s.done = true;
      {
        std::lock_guard<std::mutex> lock(mtx);
        slots[k] = std::move(s);
      }
      cv.notify_all();
    }
  };

  corpus_candidate(spec, 0);  // validates the spec before any thread starts
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  if (spec.count > 0)
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);

  bool capped = false;
  for (long k = 0; static_cast<long>(res.members.size()) < spec.count; ++k) {
    Slot s;
    {
      std::unique_lock<std::mutex> lock(mtx);
      cv.wait(lock, [&] { return slots.count(k) && slots[k].done; });
      s = std::move(slots[k]);
      slots.erase(k);
    }
    auto release = [&](long accepted) {
      {
        std::lock_guard<std::mutex> lock(mtx);
        allowed = k + 1 + (spec.count - accepted);
      }
      cv.notify_all();
    };
    if (s.error) {
      // A candidate that cannot be analyzed is a finding, not a discard.
      CorpusMemberRecord m;
      m.index = static_cast<long>(res.members.size());
      m.candidate = k;
      const CorpusCandidate cand = corpus_candidate(spec, k);
      m.a = cand.a;
      m.b = cand.b;
      m.x_of_t = cand.x_of_t;
      m.y_of_t = cand.y_of_t;
      m.violations.push_back(s.error->first + ": " + s.error->second);
      if (s.error->first == "resource_cap") capped = true;
      s.member = std::move(m);
    }
    if (!s.member) {
      ++res.summary.discarded;
      release(static_cast<long>(res.members.size()));
      continue;
    }
    CorpusMemberRecord& m = *s.member;
    m.index = static_cast<long>(res.members.size());
    if (m.census == to_string(CensusCase::coordinate_case))
      ++res.summary.coordinate;
    else if (m.census == to_string(CensusCase::not_applicable) || m.census.empty())
      ++res.summary.not_applicable;
    else if (m.rational_count == 0)
      ++res.summary.census_0;
    else if (m.rational_count == 1)
      ++res.summary.census_1;
    else
      ++res.summary.census_2;
    if (!m.violations.empty()) ++res.summary.violations;
    if (emit)
      emit(envelope("corpus",
                    Json{{"candidate", m.candidate}, {"x", to_string(m.x_of_t, "t")}, {"y", to_string(m.y_of_t, "t")}},
                    env_opt, Json(m), t0));
    res.members.push_back(std::move(m));
    release(static_cast<long>(res.members.size()));
  }
  {
    std::lock_guard<std::mutex> lock(mtx);
    stop = true;
  }
  cv.notify_all();
  for (auto& t : pool) t.join();

  res.summary.members = static_cast<long>(res.members.size());
  if (res.summary.violations > 0)
    res.exit_code = exit_violation;
  else if (capped)
    res.exit_code = exit_cap;
  if (emit) emit(envelope("corpus-summary", input, env_opt, Json(res.summary), t0));
  return res;
}

std::string corpus_table(const CorpusSummaryRecord& s) {
  std::ostringstream os;
  auto row = [&](const std::string& k, long v) { os << std::left << std::setw(28) << k << std::right << std::setw(6) << v << "\n"; };
  row("members", s.members);
  row("discarded candidates", s.discarded);
  row("rational census size 0", s.census_0);
  row("rational census size 1", s.census_1);
  row("rational census size 2", s.census_2);
  row("coordinate case (mu = 0)", s.coordinate);
  row("census not applicable", s.not_applicable);
  row("members with violations", s.violations);
  return os.str();
}

}  // namespace placeone
