#include "solp/verify.hpp"

#include <algorithm>

#include "solp/oracle.hpp"
#include "solp/social.hpp"
#include "solp/translate.hpp"

namespace solp {

VerifyResult verifyEquivalence(const Collection& c, const Caps& caps, ExecMode mode) {
    VerifyResult res;
    res.direct = enumerateSocialModels(c, caps, mode);

    auto lpa = translateAll(c);
    auto answers = enumerateAnswerSetsStructured(lpa, caps, mode);
    for (const auto& m : answers) res.projected.push_back(projectToSocial(m, lpa));
    // the correspondence is one-to-one, so duplicate projections would be a
    // finding in their own right; compare without deduplicating
    std::sort(res.projected.begin(), res.projected.end());
    res.equal = res.direct == res.projected;
    return res;
}

} // namespace solp
