// Copyright 2026 The rismec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rismec/scenario_io.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <variant>

#include <fmt/format.h>
#include <toml.hpp>

namespace rismec {

namespace {

struct Value
{
    // monostate: something the scenario format never uses (dates, tables, mixed arrays)
    std::variant<std::monostate, double, bool, std::string, std::vector<double>, std::vector<std::string>> data;
    std::optional<std::int64_t> integer;  // set for TOML integers
    int line = 0;
};

using Table = std::map<std::string, Value>;

struct Document
{
    Table root;  // top-level keys and [sim]
    Table radio;
    Table task;
    std::vector<Table> servers;
    std::vector<Table> rises;
    std::vector<Table> users;
};

[[noreturn]] void fail(int line, const std::string& msg)
{
    throw ConfigError(fmt::format("line {}: {}", line, msg));
}

int line_of(const toml::node& n) { return static_cast<int>(n.source().begin.line); }

Value convert(const toml::node& n)
{
    Value v;
    v.line = line_of(n);
    if (auto i = n.as_integer()) {
        v.integer = i->get();
        v.data = static_cast<double>(i->get());
    } else if (auto d = n.as_floating_point()) {
        v.data = d->get();
    } else if (auto b = n.as_boolean()) {
        v.data = b->get();
    } else if (auto s = n.as_string()) {
        v.data = s->get();
    } else if (auto a = n.as_array()) {
        std::vector<double> nums;
        std::vector<std::string> strs;
        bool odd = false;
        for (const auto& e : *a) {
            if (e.is_number())
                nums.push_back(e.value<double>().value());
            else if (auto es = e.as_string())
                strs.push_back(es->get());
            else
                odd = true;
        }
        if (odd || (!nums.empty() && !strs.empty()))
            v.data = std::monostate{};
        else if (!strs.empty())
            v.data = std::move(strs);
        else
            v.data = std::move(nums);
    }
    return v;
}

void fill(Table& out, const toml::table& t)
{
    for (const auto& [key, node] : t) {
        if (!out.emplace(std::string(key.str()), convert(node)).second)
            fail(line_of(node), fmt::format("duplicate key '{}'", key.str()));
    }
}

std::vector<Table> blocks(const toml::node& n, std::string_view name)
{
    const auto* arr = n.as_array();
    if (!arr || !arr->is_array_of_tables())
        fail(line_of(n), fmt::format("'{}' must be written as [[{}]] blocks", name, name));
    std::vector<Table> out;
    for (const auto& e : *arr)
        fill(out.emplace_back(), *e.as_table());
    return out;
}

Document parse_document(std::string_view text)
{
    toml::table root;
    try {
        root = toml::parse(text);
    } catch (const toml::parse_error& e) {
        fail(static_cast<int>(e.source().begin.line), std::string(e.description()));
    }

    Document doc;
    for (const auto& [key, node] : root) {
        const auto name = key.str();
        if (const auto* t = node.as_table()) {
            if (name == "radio")
                fill(doc.radio, *t);
            else if (name == "task")
                fill(doc.task, *t);
            else if (name == "sim")
                fill(doc.root, *t);
            else
                fail(line_of(node), fmt::format("unknown section [{}]", name));
        } else if (node.is_array_of_tables() || name == "server" || name == "ris" || name == "user") {
            if (name == "server")
                doc.servers = blocks(node, name);
            else if (name == "ris")
                doc.rises = blocks(node, name);
            else if (name == "user")
                doc.users = blocks(node, name);
            else
                fail(line_of(node), fmt::format("unknown block [[{}]]", name));
        } else if (!doc.root.emplace(std::string(name), convert(node)).second) {
            fail(line_of(node), fmt::format("duplicate key '{}'", name));
        }
    }
    return doc;
}

// Typed accessors over one table. Every key consumed is removed so that the
// leftovers can be reported as unknown.
class Reader
{
public:
    Reader(Table& table, std::string where) : table_(table), where_(std::move(where)) {}

    // Anything not consumed by now is an unknown key.
    void finish() const
    {
        if (!table_.empty()) {
            const auto& [key, v] = *table_.begin();
            fail(v.line, fmt::format("unknown key '{}' in {}", key, where_));
        }
    }

    bool has(const std::string& key) const { return table_.contains(key); }

    void real(const std::string& key, double& out)
    {
        if (auto v = take(key)) {
            if (auto* d = std::get_if<double>(&v->data))
                out = *d;
            else
                type_error(*v, key, "a number");
        }
    }

    void integer(const std::string& key, int& out)
    {
        if (auto v = take(key)) {
            if (!v->integer || *v->integer < INT32_MIN || *v->integer > INT32_MAX)
                type_error(*v, key, "an integer");
            out = static_cast<int>(*v->integer);
        }
    }

    void size(const std::string& key, std::size_t& out)
    {
        if (auto v = take(key)) {
            if (!v->integer || *v->integer < 0)
                type_error(*v, key, "a non-negative integer");
            out = static_cast<std::size_t>(*v->integer);
        }
    }

    void u64(const std::string& key, std::uint64_t& out)
    {
        if (auto v = take(key)) {
            // TOML integers stop at 2^63 - 1; larger values come as a decimal string
            if (v->integer && *v->integer >= 0) {
                out = static_cast<std::uint64_t>(*v->integer);
                return;
            }
            const auto* s = std::get_if<std::string>(&v->data);
            std::uint64_t n = 0;
            auto [p, ec] = s ? std::from_chars(s->data(), s->data() + s->size(), n)
                             : std::from_chars_result{nullptr, std::errc::invalid_argument};
            if (!s || s->empty() || ec != std::errc{} || p != s->data() + s->size())
                type_error(*v, key, "an unsigned 64-bit integer");
            out = n;
        }
    }

    void boolean(const std::string& key, bool& out)
    {
        if (auto v = take(key)) {
            if (auto* b = std::get_if<bool>(&v->data))
                out = *b;
            else
                type_error(*v, key, "true or false");
        }
    }

    void position(const std::string& key, Position3D& out)
    {
        if (auto v = take(key)) {
            auto* a = std::get_if<std::vector<double>>(&v->data);
            if (!a || a->size() != 3)
                type_error(*v, key, "an array of three numbers");
            out = {(*a)[0], (*a)[1], (*a)[2]};
        }
    }

    void tier(const std::string& key, Tier& out)
    {
        if (auto v = take(key)) {
            auto* s = std::get_if<std::string>(&v->data);
            auto t = s ? parse_tier(*s) : std::nullopt;
            if (!t)
                type_error(*v, key, "one of \"ground\", \"air\", \"space\", \"space_cluster\"");
            out = *t;
        }
    }

    void tier_list(const std::string& key, std::vector<Tier>& out)
    {
        if (auto v = take(key)) {
            out.clear();
            auto* strs = std::get_if<std::vector<std::string>>(&v->data);
            auto* nums = std::get_if<std::vector<double>>(&v->data);
            if (!strs && !(nums && nums->empty()))
                type_error(*v, key, "an array of tier names");
            if (strs) {
                for (const auto& s : *strs) {
                    auto t = parse_tier(s);
                    if (!t)
                        type_error(*v, key, "an array of tier names");
                    out.push_back(*t);
                }
            }
        }
    }

    void case_id(const std::string& key, CaseId& out)
    {
        if (auto v = take(key)) {
            auto* s = std::get_if<std::string>(&v->data);
            auto c = s ? parse_case(*s) : std::nullopt;
            if (!c)
                type_error(*v, key, "one of \"case1\", \"case2\", \"case3\", \"custom\"");
            out = *c;
        }
    }

private:
    std::optional<Value> take(const std::string& key)
    {
        auto node = table_.extract(key);
        if (node.empty())
            return std::nullopt;
        return std::move(node.mapped());
    }

    [[noreturn]] void type_error(const Value& v, const std::string& key, std::string_view expected)
    {
        fail(v.line, fmt::format("'{}' in {} must be {}", key, where_, expected));
    }

    Table& table_;
    std::string where_;
};

void read_sim_keys(Reader& r, ScenarioConfig& c, bool& builtin_ris)
{
    r.boolean("builtin_ris", builtin_ris);
    r.real("delta_s", c.delta_s);
    r.case_id("case", c.case_id);
    r.tier_list("custom_tiers", c.custom_tiers);
    r.boolean("ris_enabled", c.ris_enabled);
    r.integer("max_cycles", c.max_cycles);
    r.u64("seed", c.seed);
    r.real("user_area_m", c.user_area_m);
    r.size("user_count", c.user_count);
}

void require_key(const Reader& r, const Table& t, const std::string& key, const std::string& where)
{
    if (!r.has(key)) {
        const int line = t.empty() ? 0 : t.begin()->second.line;
        fail(line, fmt::format("{} is missing required key '{}'", where, key));
    }
}

} // namespace

ScenarioConfig load_scenario(std::string_view text)
{
    Document doc = parse_document(text);
    ScenarioConfig c = default_scenario();

    const bool user_count_given = doc.root.contains("user_count");
    // false with no [[ris]] block: no surfaces at all
    bool builtin_ris = true;
    {
        Reader r(doc.root, "[sim]");
        read_sim_keys(r, c, builtin_ris);
        r.finish();
    }
    {
        Reader r(doc.radio, "[radio]");
        auto& p = c.radio;
        r.real("tx_power_dbm", p.tx_power_dbm);
        r.real("bandwidth_hz", p.bandwidth_hz);
        r.real("noise_dbm", p.noise_dbm);
        r.real("carrier_hz", p.carrier_hz);
        r.real("nlos_exponent", p.nlos_exponent);
        r.real("los_exponent", p.los_exponent);
        r.real("ris_segment_exponent", p.ris_segment_exponent);
        r.real("reference_loss_db", p.reference_loss_db);
        r.finish();
    }
    {
        Reader r(doc.task, "[task]");
        r.real("input_bits", c.task.input_bits);
        r.real("cycles", c.task.cycles);
        r.real("result_bits", c.task.result_bits);
        r.finish();
    }

    if (!doc.servers.empty()) {
        c.servers.clear();
        for (std::size_t i = 0; i < doc.servers.size(); ++i) {
            auto& t = doc.servers[i];
            const auto where = fmt::format("[[server]] #{}", i + 1);
            Reader r(t, where);
            require_key(r, t, "tier", where);
            require_key(r, t, "position", where);
            require_key(r, t, "capacity_cps", where);
            ServerSpec s;
            r.tier("tier", s.tier);
            r.position("position", s.position);
            r.real("capacity_cps", s.capacity_cps);
            r.integer("count", s.count);
            s.cluster_size = s.tier == Tier::SpaceCluster ? 3 : 1;
            r.integer("cluster_size", s.cluster_size);
            s.max_concurrent = default_max_concurrent(s.tier, s.cluster_size);
            r.integer("max_concurrent", s.max_concurrent);
            r.finish();
            c.servers.push_back(s);
        }
    }

    if (!builtin_ris)
        c.rises.clear();
    if (!doc.rises.empty()) {
        c.rises.clear();
        for (std::size_t i = 0; i < doc.rises.size(); ++i) {
            auto& t = doc.rises[i];
            const auto where = fmt::format("[[ris]] #{}", i + 1);
            Reader r(t, where);
            require_key(r, t, "position", where);
            require_key(r, t, "segment", where);
            RisSpec s;
            s.id = static_cast<int>(i);
            s.n_elements = 256;
            r.integer("id", s.id);
            r.position("position", s.position);
            r.integer("n_elements", s.n_elements);
            r.tier("segment", s.segment);
            r.finish();
            c.rises.push_back(s);
        }
    }

    if (!doc.users.empty()) {
        struct Partial
        {
            std::optional<double> input_bits, cycles, result_bits;
        };
        std::vector<Partial> partial;
        c.users.clear();
        for (std::size_t i = 0; i < doc.users.size(); ++i) {
            auto& t = doc.users[i];
            const auto where = fmt::format("[[user]] #{}", i + 1);
            Reader r(t, where);
            require_key(r, t, "position", where);
            UserSpec u;
            r.position("position", u.position);
            Partial p;
            for (auto [key, slot] : {std::pair{"input_bits", &p.input_bits},
                                     std::pair{"cycles", &p.cycles},
                                     std::pair{"result_bits", &p.result_bits}}) {
                if (r.has(key)) {
                    double d = 0.0;
                    r.real(key, d);
                    *slot = d;
                }
            }
            r.finish();
            c.users.push_back(u);
            partial.push_back(p);
        }
        // Per-user overrides start from the scenario-wide task.
        for (std::size_t i = 0; i < c.users.size(); ++i) {
            const auto& p = partial[i];
            if (p.input_bits || p.cycles || p.result_bits)
                c.users[i].task = TaskProfile{p.input_bits.value_or(c.task.input_bits),
                                              p.cycles.value_or(c.task.cycles),
                                              p.result_bits.value_or(c.task.result_bits)};
        }
        if (!user_count_given)
            c.user_count = c.users.size();
    }

    require_valid(c);
    return c;
}

ScenarioConfig load_scenario_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::system_error(errno, std::generic_category(),
                                fmt::format("cannot open scenario '{}'", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario(buf.str());
}

namespace {

std::string num(double v) { return fmt::format("{}", v); }

std::string pos(const Position3D& p) { return fmt::format("[{}, {}, {}]", p.x, p.y, p.z); }

} // namespace

std::string serialize_scenario(const ScenarioConfig& c)
{
    std::string out;
    auto line = [&out](std::string_view key, const std::string& value) {
        out += fmt::format("{} = {}\n", key, value);
    };

    out += "[sim]\n";
    line("delta_s", num(c.delta_s));
    line("case", fmt::format("\"{}\"", case_name(c.case_id)));
    {
        std::string tiers = "[";
        for (std::size_t i = 0; i < c.custom_tiers.size(); ++i)
            tiers += fmt::format("{}\"{}\"", i ? ", " : "", tier_name(c.custom_tiers[i]));
        line("custom_tiers", tiers + "]");
    }
    line("ris_enabled", c.ris_enabled ? "true" : "false");
    if (c.rises.empty())
        line("builtin_ris", "false");
    line("max_cycles", std::to_string(c.max_cycles));
    if (c.seed > static_cast<std::uint64_t>(INT64_MAX))
        line("seed", fmt::format("\"{}\"", c.seed));
    else
        line("seed", std::to_string(c.seed));
    line("user_area_m", num(c.user_area_m));
    line("user_count", std::to_string(c.user_count));

    out += "\n[radio]\n";
    line("tx_power_dbm", num(c.radio.tx_power_dbm));
    line("bandwidth_hz", num(c.radio.bandwidth_hz));
    line("noise_dbm", num(c.radio.noise_dbm));
    line("carrier_hz", num(c.radio.carrier_hz));
    line("nlos_exponent", num(c.radio.nlos_exponent));
    line("los_exponent", num(c.radio.los_exponent));
    line("ris_segment_exponent", num(c.radio.ris_segment_exponent));
    line("reference_loss_db", num(c.radio.reference_loss_db));

    out += "\n[task]\n";
    line("input_bits", num(c.task.input_bits));
    line("cycles", num(c.task.cycles));
    line("result_bits", num(c.task.result_bits));

    for (const auto& s : c.servers) {
        out += "\n[[server]]\n";
        line("tier", fmt::format("\"{}\"", tier_name(s.tier)));
        line("position", pos(s.position));
        line("capacity_cps", num(s.capacity_cps));
        line("count", std::to_string(s.count));
        line("cluster_size", std::to_string(s.cluster_size));
        line("max_concurrent", std::to_string(s.max_concurrent));
    }
    for (const auto& r : c.rises) {
        out += "\n[[ris]]\n";
        line("id", std::to_string(r.id));
        line("position", pos(r.position));
        line("n_elements", std::to_string(r.n_elements));
        line("segment", fmt::format("\"{}\"", tier_name(r.segment)));
    }
    for (const auto& u : c.users) {
        out += "\n[[user]]\n";
        line("position", pos(u.position));
        if (u.task) {
            line("input_bits", num(u.task->input_bits));
            line("cycles", num(u.task->cycles));
            line("result_bits", num(u.task->result_bits));
        }
    }
    return out;
}

} // namespace rismec
