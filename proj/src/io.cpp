/*
   Copyright 2026 The lwhss Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lwhss/io.hpp"

#include <charconv>
#include <sstream>
#include <string_view>

#include "lwhss/error.hpp"

namespace lwhss {

namespace {

constexpr std::string_view kCodeTag = "labelweight-code/v1";
constexpr std::string_view kSchemeTag = "labelweight-hss-scheme/v1";

class LineReader {
public:
    explicit LineReader(const std::string& text) : in_(text) {}

    std::string next(std::string_view what) {
        std::string line;
        if (!std::getline(in_, line)) fail(ErrorKind::ParseError, "unexpected end of document, wanted " + std::string(what));
        ++number_;
        return line;
    }

    /// Reads `<key> <rest>` and returns rest.
    std::string keyed(std::string_view key) {
        const std::string line = next(key);
        if (line.size() < key.size() || line.compare(0, key.size(), key) != 0 ||
            (line.size() > key.size() && line[key.size()] != ' '))
            fail(ErrorKind::ParseError, "line " + std::to_string(number_) + ": expected '" + std::string(key) + "'");
        return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
    }

    void expect(std::string_view exact) {
        if (next(exact) != exact)
            fail(ErrorKind::ParseError, "line " + std::to_string(number_) + ": expected '" + std::string(exact) + "'");
    }

    bool at_end() {
        return in_.peek() == std::char_traits<char>::eof();
    }

private:
    std::istringstream in_;
    std::size_t number_ = 0;
};

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        fail(ErrorKind::ParseError, "not an unsigned integer: '" + std::string(s) + "'");
    return v;
}

std::vector<std::uint64_t> parse_list(std::string_view s, char sep) {
    std::vector<std::uint64_t> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = s.find(sep, start);
        out.push_back(parse_u64(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

template <typename Range>
void write_list(std::ostream& os, const Range& xs, char sep) {
    bool first = true;
    for (const auto& x : xs) {
        if (!first) os << sep;
        os << x;
        first = false;
    }
}

LabeledCode read_code_body(LineReader& in) {
    const Field field = Field::parse(in.keyed("field"));
    const auto n = parse_u64(in.keyed("length"));
    const auto k = parse_u64(in.keyed("dimension"));
    const auto s = parse_u64(in.keyed("servers"));
    const auto labels64 = parse_list(in.keyed("labels"), ' ');
    if (labels64.size() != n) fail(ErrorKind::ParseError, "labels line has the wrong length");
    std::vector<std::size_t> labels(labels64.begin(), labels64.end());
    Matrix g(field, k, n);
    for (std::size_t r = 0; r < k; ++r) {
        const auto row = parse_list(in.keyed("row"), ' ');
        if (row.size() != n) fail(ErrorKind::ParseError, "generator row " + std::to_string(r) + " has the wrong length");
        for (std::size_t c = 0; c < n; ++c) {
            if (row[c] >= field.order()) fail(ErrorKind::ParseError, "generator entry outside the field");
            g(r, c) = static_cast<Code>(row[c]);
        }
    }
    in.expect("end");
    return LabeledCode(std::move(g), Labeling(s, std::move(labels)));
}

}  // namespace

std::string write_code(const LabeledCode& code) {
    std::ostringstream os;
    os << kCodeTag << '\n';
    os << "field " << code.field().to_string() << '\n';
    os << "length " << code.length() << '\n';
    os << "dimension " << code.dimension() << '\n';
    os << "servers " << code.servers() << '\n';
    os << "labels ";
    write_list(os, code.labeling().labels(), ' ');
    os << '\n';
    for (std::size_t r = 0; r < code.dimension(); ++r) {
        os << "row ";
        write_list(os, code.generator().row(r), ' ');
        os << '\n';
    }
    os << "end\n";
    return os.str();
}

LabeledCode read_code(const std::string& text) {
    LineReader in(text);
    in.expect(kCodeTag);
    auto code = read_code_body(in);
    if (!in.at_end()) fail(ErrorKind::ParseError, "trailing content after code document");
    return code;
}

std::string write_scheme(const HssScheme& scheme) {
    const auto& p = scheme.params();
    std::ostringstream os;
    os << kSchemeTag << '\n';
    os << "params " << p.servers << ' ' << p.threshold << ' ' << p.degree << ' ' << p.instances << ' ' << p.variables
       << '\n';
    os << "selection";
    for (std::size_t k = 0; k < p.degree; ++k) os << ' ' << p.factor_variable(k);
    os << '\n';
    if (scheme.labelweight_status() == LabelweightStatus::Verified && scheme.min_labelweight())
        os << "labelweight verified " << *scheme.min_labelweight() << '\n';
    else
        os << "labelweight asserted\n";
    os << write_code(scheme.code());
    std::uint64_t count = 0;
    for (std::size_t r = 0; r < scheme.code().length(); ++r) count += scheme.eval_terms(r).size();
    os << "terms " << count << '\n';
    const auto& space = scheme.monomials();
    for (std::size_t r = 0; r < scheme.code().length(); ++r)
        for (const auto& term : scheme.eval_terms(r)) {
            const MonomialId id = space.at(term.monomial);
            os << "term " << r << ' ' << id.instance << ' ';
            for (std::size_t k = 0; k < id.subsets.size(); ++k) {
                if (k) os << ';';
                write_list(os, scheme.subsets().subset(id.subsets[k]), ',');
            }
            os << ' ' << term.coefficient << '\n';
        }
    return os.str();
}

HssScheme read_scheme(const std::string& text) {
    LineReader in(text);
    in.expect(kSchemeTag);
    const auto pv = parse_list(in.keyed("params"), ' ');
    if (pv.size() != 5) fail(ErrorKind::ParseError, "params line needs s t d l m");
    HssParams params{pv[0], pv[1], pv[2], pv[3], pv[4], {}};
    const auto sel = parse_list(in.keyed("selection"), ' ');
    bool trivial = sel.size() == params.degree;
    for (std::size_t k = 0; k < sel.size() && trivial; ++k) trivial = sel[k] == k;
    if (!trivial) params.selection.assign(sel.begin(), sel.end());
    params.validate();

    const std::string lw = in.keyed("labelweight");
    LabelweightStatus status = LabelweightStatus::AssertedByConstruction;
    std::optional<std::size_t> weight;
    if (lw.rfind("verified ", 0) == 0) {
        status = LabelweightStatus::Verified;
        weight = parse_u64(std::string_view(lw).substr(9));
    } else if (lw != "asserted") {
        fail(ErrorKind::ParseError, "labelweight line must be 'verified <w>' or 'asserted'");
    }
    in.expect(kCodeTag);
    LabeledCode code = read_code_body(in);

    const MonomialSpace space(params, ~std::uint64_t{0});
    const auto count = parse_u64(in.keyed("terms"));
    std::vector<std::vector<EvalTerm>> eval(code.length());
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::string line = in.keyed("term");
        std::istringstream fields(line);
        std::string r_s, i_s, tuple_s, c_s, extra;
        if (!(fields >> r_s >> i_s >> tuple_s >> c_s) || (fields >> extra))
            fail(ErrorKind::ParseError, "term line needs r i tuple coefficient");
        const auto r = parse_u64(r_s);
        if (r >= code.length()) fail(ErrorKind::ParseError, "term coordinate out of range");
        MonomialId id;
        id.instance = parse_u64(i_s);
        if (id.instance >= params.instances) fail(ErrorKind::ParseError, "term instance out of range");
        std::size_t start = 0;
        const std::string_view tv(tuple_s);
        while (true) {
            const std::size_t end = tv.find(';', start);
            const auto members64 = parse_list(tv.substr(start, end == std::string_view::npos ? end : end - start), ',');
            std::vector<std::size_t> members(members64.begin(), members64.end());
            const auto idx = space.subsets().find(members);
            if (!idx) fail(ErrorKind::ParseError, "term references an unknown subset");
            id.subsets.push_back(*idx);
            if (end == std::string_view::npos) break;
            start = end + 1;
        }
        if (id.subsets.size() != params.degree) fail(ErrorKind::ParseError, "term tuple must have d subsets");
        const auto c = parse_u64(c_s);
        if (c >= code.field().order()) fail(ErrorKind::ParseError, "term coefficient outside the field");
        const std::uint64_t mono = space.index_of(id);
        if (!eval[r].empty() && eval[r].back().monomial >= mono)
            fail(ErrorKind::ParseError, "terms must be sorted by monomial within a coordinate");
        eval[r].push_back({mono, static_cast<Code>(c)});
    }
    if (!in.at_end()) fail(ErrorKind::ParseError, "trailing content after scheme document");
    return HssScheme(std::move(params), std::move(code), std::move(eval), status, weight);
}

}  // namespace lwhss
