#ifndef HS_RING_HPP
#define HS_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hs/field.hpp"

namespace hs {

// Ambient polynomial ring descriptor: coefficient field plus an ordered
// list of variable names.  Immutable and shared; compatibility between
// values is structural, not pointer identity.
class Ring {
  public:
    Ring(Field field, std::vector<std::string> vars);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(std::size_t i) const { return vars_.at(i); }
    std::optional<std::size_t> variable_index(const std::string& name) const;

    bool operator==(const Ring& o) const {
        return field_ == o.field_ && vars_ == o.vars_;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Field field_;
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> vars);

}  // namespace hs

#endif
