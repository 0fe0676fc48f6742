#include "bipart/class_spec.hpp"

#include <algorithm>
#include <sstream>

namespace bipart {

namespace {

void normalize(std::vector<Pattern>& ps) {
    std::sort(ps.begin(), ps.end(),
              [](Pattern a, Pattern b) { return pattern_name(a) < pattern_name(b); });
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
}

} // namespace

ClassSpec::ClassSpec(std::initializer_list<Pattern> ps) : named(ps) { normalize(named); }
ClassSpec::ClassSpec(std::vector<Pattern> ps) : named(std::move(ps)) { normalize(named); }

bool ClassSpec::has(Pattern p) const {
    return std::find(named.begin(), named.end(), p) != named.end();
}

std::string class_name(const ClassSpec& spec) {
    if (spec.named.empty()) return "empty";
    std::ostringstream out;
    for (std::size_t i = 0; i < spec.named.size(); ++i) {
        if (i) out << '-';
        out << pattern_name(spec.named[i]);
    }
    return out.str();
}

std::optional<ClassSpec> class_from_name(const std::string& name) {
    if (name == "empty" || name == "none") return ClassSpec{};
    std::vector<Pattern> ps;
    std::string token;
    std::istringstream in(name);
    while (std::getline(in, token, '-')) {
        const auto p = pattern_from_name(token);
        if (!p) return std::nullopt;
        ps.push_back(*p);
    }
    if (ps.empty()) return std::nullopt;
    return ClassSpec(std::move(ps));
}

const std::vector<ClassSpec>& registry_classes() {
    using P = Pattern;
    static const std::vector<ClassSpec> classes = [] {
        std::vector<ClassSpec> list = {
            ClassSpec{},
            {P::P3},
            {P::K2K1},
            {P::K2K1, P::P3},
            {P::P4},
            {P::C4},
            {P::TwoK2},
            {P::S4},
            {P::TwoK2, P::C4},
            {P::TwoK2, P::C4, P::P4},
            {P::C4, P::P4, P::S4},
            {P::C4, P::P4},
            {P::TwoK2, P::P4},
            {P::TwoK2, P::S4},
            {P::TwoK2, P::S4, P::P4},
            {P::C4, P::S4},
            {P::P4, P::S4},
            {P::C4, P::S4, P::TwoK2},
            {P::C4, P::P4, P::S4, P::TwoK2},
        };
        std::sort(list.begin(), list.end(), [](const ClassSpec& a, const ClassSpec& b) {
            return class_name(a) < class_name(b);
        });
        return list;
    }();
    return classes;
}

bool is_registry_class(const ClassSpec& spec) {
    if (!spec.custom.empty()) return false;
    const auto& reg = registry_classes();
    return std::find(reg.begin(), reg.end(), spec) != reg.end();
}

} // namespace bipart
