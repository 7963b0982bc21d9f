#include "manetsim/routing/protocol.hpp"

#include "manetsim/routing/batman.hpp"
#include "manetsim/routing/olsr.hpp"

namespace manetsim {

const char* protocol_name(ProtocolKind kind) {
    switch (kind) {
    case ProtocolKind::Olsr: return "olsr";
    case ProtocolKind::MaOlsr: return "ma-olsr";
    case ProtocolKind::Batman: return "batman";
    case ProtocolKind::Batmobile: return "batmobile";
    }
    return "?";
}

std::optional<ProtocolKind> parse_protocol(const std::string& name) {
    if (name == "olsr")
        return ProtocolKind::Olsr;
    if (name == "ma-olsr" || name == "maolsr")
        return ProtocolKind::MaOlsr;
    if (name == "batman")
        return ProtocolKind::Batman;
    if (name == "batmobile")
        return ProtocolKind::Batmobile;
    return std::nullopt;
}

std::unique_ptr<Protocol> make_protocol(ProtocolKind kind, NodeEnv& env,
                                        const ProtocolParams& params) {
    switch (kind) {
    case ProtocolKind::Olsr: return std::make_unique<OlsrProtocol>(env, params);
    case ProtocolKind::MaOlsr: return std::make_unique<MaOlsrProtocol>(env, params);
    case ProtocolKind::Batman: return std::make_unique<BatmanProtocol>(env, params);
    case ProtocolKind::Batmobile: return std::make_unique<BatmobileProtocol>(env, params);
    }
    throw std::logic_error("unknown protocol kind");
}

} // namespace manetsim
