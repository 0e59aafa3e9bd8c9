#include "sortnet/encode.hpp"

#include <algorithm>

#include "sortnet/errors.hpp"

namespace sortnet {

std::string to_string(Tier tier) {
  switch (tier) {
    case Tier::Base:
      return "base";
    case Tier::Necessary:
      return "necessary";
    case Tier::Full:
      return "full";
  }
  return "?";
}

Tier parse_tier(const std::string& text) {
  if (text == "base") return Tier::Base;
  if (text == "necessary") return Tier::Necessary;
  if (text == "full") return Tier::Full;
  throw RangeError("unknown tier \"" + text + "\" (expected base|necessary|full)");
}

EncodeOptions EncodeOptions::for_tier(Tier tier) {
  EncodeOptions o;
  o.necessary = tier != Tier::Base;
  o.symmetry = tier == Tier::Full;
  return o;
}

namespace {

void require_two_layers(const VarMap& vars, const char* what) {
  if (vars.depth() < 2) throw DomainError(std::string(what) + " needs depth >= 2");
}

// Comparator variables of `layer` touching channel k.
std::vector<int> touching(const VarMap& vars, int layer, Channel k) {
  std::vector<int> result;
  for (Channel a = 1; a < k; ++a) result.push_back(vars.comparator_var(layer, a, k));
  for (Channel b = k + 1; b <= vars.channels(); ++b) result.push_back(vars.comparator_var(layer, k, b));
  return result;
}

}  // namespace

Encoding encode_base(int n, int d) {
  if (n < 2 || n > kMaxEncodeChannels || d < 1 || d > kMaxEncodeDepth) {
    throw RangeError("base encoding needs 2 <= n <= " + std::to_string(kMaxEncodeChannels) +
                     " and 1 <= d <= " + std::to_string(kMaxEncodeDepth));
  }
  VarMap vars(n, d);
  CnfInstance cnf(vars.variable_count());

  ClauseGroup layer_group{"phi0.layer", {}};
  ClauseGroup used_group{"phi0.used", {}};
  for (int l = 1; l <= d; ++l) {
    for (Channel k = 1; k <= n; ++k) {
      auto comps = touching(vars, l, k);
      for (std::size_t a = 0; a < comps.size(); ++a) {
        for (std::size_t b = a + 1; b < comps.size(); ++b) {
          // Two comparators share at most one channel, so each pair appears once.
          layer_group.clauses.push_back({-comps[a], -comps[b]});
        }
      }
      int u = vars.used_var(l, k);
      Clause some{-u};
      for (int c : comps) {
        used_group.clauses.push_back({-c, u});
        some.push_back(c);
      }
      used_group.clauses.push_back(std::move(some));
    }
  }

  ClauseGroup input_group{"phi0.input", {}};
  ClauseGroup update_group{"phi0.update", {}};
  ClauseGroup sorted_group{"phi0.sorted", {}};
  const auto& inputs = vars.inputs();
  for (int x = 0; x < static_cast<int>(inputs.size()); ++x) {
    const auto& word = inputs[static_cast<std::size_t>(x)];
    for (Channel k = 1; k <= n; ++k) {
      int v = vars.value_var(x, 0, k);
      input_group.clauses.push_back({word.at(k) ? v : -v});
    }
    for (int l = 1; l <= d; ++l) {
      for (Channel i = 1; i <= n; ++i) {
        for (Channel j = i + 1; j <= n; ++j) {
          int c = vars.comparator_var(l, i, j);
          int a = vars.value_var(x, l - 1, i);
          int b = vars.value_var(x, l - 1, j);
          int lo = vars.value_var(x, l, i);
          int hi = vars.value_var(x, l, j);
          // lo' = a AND b
          update_group.clauses.push_back({-c, -lo, a});
          update_group.clauses.push_back({-c, -lo, b});
          update_group.clauses.push_back({-c, lo, -a, -b});
          // hi' = a OR b
          update_group.clauses.push_back({-c, -hi, a, b});
          update_group.clauses.push_back({-c, hi, -a});
          update_group.clauses.push_back({-c, hi, -b});
        }
      }
      for (Channel k = 1; k <= n; ++k) {
        int u = vars.used_var(l, k);
        int before = vars.value_var(x, l - 1, k);
        int after = vars.value_var(x, l, k);
        update_group.clauses.push_back({u, -after, before});
        update_group.clauses.push_back({u, after, -before});
      }
    }
    for (Channel k = 1; k < n; ++k) {
      sorted_group.clauses.push_back({-vars.value_var(x, d, k), vars.value_var(x, d, k + 1)});
    }
  }

  cnf.add_group(std::move(layer_group));
  cnf.add_group(std::move(used_group));
  cnf.add_group(std::move(input_group));
  cnf.add_group(std::move(update_group));
  cnf.add_group(std::move(sorted_group));
  return {std::move(vars), std::move(cnf)};
}

ClauseGroup encode_phi1(const VarMap& vars) {
  ClauseGroup g{"phi1", {}};
  int n = vars.channels();
  int d = vars.depth();
  for (Channel i = 1; i <= n; ++i) {
    for (Channel j = i + 2; j <= n; ++j) g.clauses.push_back({-vars.comparator_var(d, i, j)});
  }
  return g;
}

ClauseGroup encode_phi1_ell(const VarMap& vars, int layer) {
  int n = vars.channels();
  int d = vars.depth();
  if (layer < 1 || layer > d) throw RangeError("phi1(l) needs 1 <= l <= d");
  ClauseGroup g{layer == d ? "phi1" : "phi1(l=" + std::to_string(layer) + ")", {}};
  for (Channel i = 1; i <= n; ++i) {
    for (Channel j = i + 2; j <= n; ++j) {
      Clause clause{-vars.comparator_var(layer, i, j)};
      for (int later = layer + 1; later <= d; ++later) {
        clause.push_back(vars.used_var(later, i));
        clause.push_back(vars.used_var(later, j));
      }
      g.clauses.push_back(std::move(clause));
    }
  }
  return g;
}

ClauseGroup encode_phi2(const VarMap& vars) {
  require_two_layers(vars, "phi2");
  ClauseGroup g{"phi2", {}};
  int n = vars.channels();
  int pen = vars.depth() - 1;
  for (Channel i = 1; i <= n; ++i) {
    for (Channel j = i + 4; j <= n; ++j) g.clauses.push_back({-vars.comparator_var(pen, i, j)});
  }
  return g;
}

ClauseGroup encode_phi3(const VarMap& vars) {
  require_two_layers(vars, "phi3");
  ClauseGroup g{"phi3", {}};
  int d = vars.depth();
  for (Channel i = 1; i + 3 <= vars.channels(); ++i) {
    int wide = vars.comparator_var(d - 1, i, i + 3);
    g.clauses.push_back({-wide, vars.comparator_var(d, i, i + 1)});
    g.clauses.push_back({-wide, vars.comparator_var(d, i + 2, i + 3)});
  }
  return g;
}

ClauseGroup encode_phi4(const VarMap& vars) {
  require_two_layers(vars, "phi4");
  ClauseGroup g{"phi4", {}};
  int d = vars.depth();
  for (Channel i = 1; i + 2 <= vars.channels(); ++i) {
    g.clauses.push_back({-vars.comparator_var(d - 1, i, i + 2), vars.comparator_var(d, i, i + 1),
                         vars.comparator_var(d, i + 1, i + 2)});
  }
  return g;
}

std::vector<ClauseGroup> encode_psi(const VarMap& vars) {
  require_two_layers(vars, "psi");
  int n = vars.channels();
  int d = vars.depth();
  auto c = [&](Channel i) { return vars.comparator_var(d, i, i + 1); };
  auto u_last = [&](Channel k) { return vars.used_var(d, k); };
  auto u_pen = [&](Channel k) { return vars.used_var(d - 1, k); };

  ClauseGroup psi1{"psi1", {}};
  for (Channel i = 1; i < n; ++i) psi1.clauses.push_back({u_last(i), u_last(i + 1)});

  // c(i,i+1) & c(i+2,i+3) -> (u'i & u'i+1) | (u'i+2 & u'i+3)
  ClauseGroup psi2a{"psi2a", {}};
  for (Channel i = 1; i + 3 <= n; ++i) {
    for (Channel upper : {i, i + 1}) {
      for (Channel lower : {i + 2, i + 3}) {
        psi2a.clauses.push_back({-c(i), -c(i + 2), u_pen(upper), u_pen(lower)});
      }
    }
  }

  // c(i,i+1) & !u(i+2) -> (u'i & u'i+1) | u'i+2
  ClauseGroup psi2b{"psi2b", {}};
  for (Channel i = 1; i + 2 <= n; ++i) {
    for (Channel k : {i, i + 1}) {
      psi2b.clauses.push_back({-c(i), u_last(i + 2), u_pen(k), u_pen(i + 2)});
    }
  }

  // !u(i) & c(i+1,i+2) -> u'i | (u'i+1 & u'i+2)
  ClauseGroup psi2c{"psi2c", {}};
  for (Channel i = 1; i + 2 <= n; ++i) {
    for (Channel k : {i + 1, i + 2}) {
      psi2c.clauses.push_back({u_last(i), -c(i + 1), u_pen(i), u_pen(k)});
    }
  }

  ClauseGroup psi3a{"psi3a", {}};
  for (Channel i = 1; i + 2 <= n; ++i) {
    psi3a.clauses.push_back({-c(i), u_last(i + 2), u_pen(i), u_pen(i + 1)});
  }
  ClauseGroup psi3b{"psi3b", {}};
  for (Channel i = 2; i + 1 <= n; ++i) {
    psi3b.clauses.push_back({-c(i), u_last(i - 1), u_pen(i), u_pen(i + 1)});
  }

  std::vector<ClauseGroup> groups;
  groups.push_back(std::move(psi1));
  groups.push_back(std::move(psi2a));
  groups.push_back(std::move(psi2b));
  groups.push_back(std::move(psi2c));
  groups.push_back(std::move(psi3a));
  groups.push_back(std::move(psi3b));
  return groups;
}

ClauseGroup encode_prefix(const Network& prefix, const VarMap& vars) {
  if (prefix.channels() != vars.channels()) {
    throw ShapeError("prefix has " + std::to_string(prefix.channels()) + " channels, encoding has " +
                     std::to_string(vars.channels()));
  }
  if (prefix.depth() > vars.depth()) {
    throw ShapeError("prefix depth " + std::to_string(prefix.depth()) + " exceeds encoding depth " +
                     std::to_string(vars.depth()));
  }
  ClauseGroup g{"prefix", {}};
  int n = vars.channels();
  for (int l = 1; l <= prefix.depth(); ++l) {
    const Layer& layer = prefix.layer(l);
    for (Channel i = 1; i <= n; ++i) {
      for (Channel j = i + 1; j <= n; ++j) {
        int v = vars.comparator_var(l, i, j);
        g.clauses.push_back({layer.contains({i, j}) ? v : -v});
      }
    }
  }
  return g;
}

Encoding encode(int n, int d, const EncodeOptions& options) {
  if (options.parberry && options.prefix) {
    throw DomainError("--parberry and an explicit prefix are mutually exclusive");
  }
  std::optional<Network> prefix = options.prefix;
  if (options.parberry) prefix = Network(n, {parberry_layer(n)});
  bool last_layer_constraints = options.necessary || options.symmetry;
  if (prefix && last_layer_constraints && prefix->depth() > std::max(d - 2, 0)) {
    throw DomainError("prefix of depth " + std::to_string(prefix->depth()) +
                      " fixes layers constrained by the last-layer conditions at depth " +
                      std::to_string(d));
  }

  Encoding enc = encode_base(n, d);
  if (options.necessary || options.symmetry) {
    enc.cnf.add_group(encode_phi1(enc.vars));
    if (d >= 2) {
      enc.cnf.add_group(encode_phi2(enc.vars));
      enc.cnf.add_group(encode_phi3(enc.vars));
      enc.cnf.add_group(encode_phi4(enc.vars));
    }
  }
  if (options.generalized_phi1) {
    for (int l = 1; l < d; ++l) enc.cnf.add_group(encode_phi1_ell(enc.vars, l));
  }
  if (options.symmetry && d >= 2) {
    for (auto& g : encode_psi(enc.vars)) enc.cnf.add_group(std::move(g));
  }
  if (prefix) enc.cnf.add_group(encode_prefix(*prefix, enc.vars));
  return enc;
}

}  // namespace sortnet
