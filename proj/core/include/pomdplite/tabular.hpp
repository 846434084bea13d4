#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pomdplite/model.hpp"

namespace pomdplite {

/// Fully tabular POMDP-lite model: named states/params/actions/observations
/// with explicit probability rows. Backs both the .plite text format and the
/// small built-in domains.
class TabularModel final : public Model {
public:
    struct Row {
        int next;  // state index, or observation index (kNullObs for null)
        double p;
    };

    struct Data {
        std::string model_name = "tabular";
        double gamma = 0.95;
        std::vector<std::string> states;
        std::vector<std::string> params;
        std::vector<std::string> actions;
        std::vector<std::string> observations;  // excludes the implicit null
        std::vector<double> prior;              // per param, sums to 1
        int initial_state = 0;
        std::vector<bool> terminal;             // per state
        // Indexed [((theta * |X|) + x) * |A| + a]. A missing observation row
        // means {null: 1}; a missing reward means 0. phi defaults to identity;
        // entries give the successor theta index per (theta, x, a).
        std::vector<std::vector<Row>> transition;
        std::vector<std::vector<Row>> observation;
        std::vector<double> rewards;
        std::vector<std::int32_t> phi;  // empty = static
    };

    explicit TabularModel(Data data);

    const Data& data() const { return data_; }

    std::string name() const override { return data_.model_name; }
    double discount() const override { return data_.gamma; }
    int num_actions() const override { return static_cast<int>(data_.actions.size()); }

    std::int64_t num_hidden_values() const override {
        return static_cast<std::int64_t>(data_.params.size());
    }
    void prior_weights(std::vector<double>& out) const override { out = data_.prior; }

    Bits initial_x() const override { return bits_of(static_cast<std::uint64_t>(data_.initial_state)); }
    bool is_terminal(const Bits& x) const override { return data_.terminal[x[0]]; }
    void legal_actions(const AugState& s, ActionList& out) const override;
    double reward(const Theta& theta, const Bits& x, Action a) const override;
    Theta dynamics(const Theta& theta, const Bits& x, Action a) const override;
    bool has_static_hidden() const override { return data_.phi.empty(); }
    void transition_support(const Theta& theta, const Bits& x, Action a,
                            StateSupport& out) const override;
    void observation_support(const Theta& theta, const Bits& x2, Action a,
                             ObsSupport& out) const override;
    double transition_prob(const Theta& theta, const Bits& x, Action a,
                           const Bits& x2) const override;
    double observation_prob(const Theta& theta, const Bits& x2, Action a,
                            Obs o) const override;

    double suggested_exploration() const override { return exploration_; }

    std::string format_x(const Bits& x) const override { return data_.states[x[0]]; }
    std::string format_action(Action a) const override { return data_.actions[a]; }
    std::string format_obs(Obs o) const override {
        return o == kNullObs ? "null" : data_.observations[o];
    }

    std::optional<int> state_index(const std::string& name) const;
    std::optional<int> param_index(const std::string& name) const;
    std::optional<int> action_index(const std::string& name) const;
    std::optional<Obs> obs_index(const std::string& name) const;

private:
    std::size_t cell(const Theta& theta, const Bits& x, Action a) const {
        return (theta[0] * data_.states.size() + x[0]) * data_.actions.size() +
               static_cast<std::size_t>(a);
    }

    Data data_;
    double exploration_ = 1.0;
};

}  // namespace pomdplite
