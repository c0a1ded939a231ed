// Lebedev quadrature tables (unit sphere, weights scaled to sum to 4*pi).
// Generated by scripts/gen_lebedev_tables.py; do not edit by hand.

#include "ambiarray/grids.hpp"

namespace ambiarray::detail {

const LebedevPoint kLebedev6[6] = {
    {1.5707963267948966, 0.0, 2.0943951023931953},
    {1.5707963267948966, 3.141592653589793, 2.0943951023931953},
    {1.5707963267948966, 1.5707963267948966, 2.0943951023931953},
    {1.5707963267948966, -1.5707963267948966, 2.0943951023931953},
    {0.0, 0.0, 2.0943951023931953},
    {3.141592653589793, 0.0, 2.0943951023931953},
};

const LebedevPoint kLebedev26[26] = {
    {1.5707963267948966, 0.0, 0.5983986006837702},
    {1.5707963267948966, 3.141592653589793, 0.5983986006837702},
    {1.5707963267948966, 1.5707963267948966, 0.5983986006837702},
    {1.5707963267948966, -1.5707963267948966, 0.5983986006837702},
    {0.0, 0.0, 0.5983986006837702},
    {3.141592653589793, 0.0, 0.5983986006837702},
    {0.7853981633974483, 1.5707963267948966, 0.4787188805470161},
    {0.7853981633974483, -1.5707963267948966, 0.4787188805470161},
    {2.356194490192345, 1.5707963267948966, 0.4787188805470161},
    {2.356194490192345, -1.5707963267948966, 0.4787188805470161},
    {0.7853981633974483, 0.0, 0.4787188805470161},
    {2.356194490192345, 0.0, 0.4787188805470161},
    {0.7853981633974483, 3.141592653589793, 0.4787188805470161},
    {2.356194490192345, 3.141592653589793, 0.4787188805470161},
    {1.5707963267948966, 0.7853981633974483, 0.4787188805470161},
    {1.5707963267948966, 2.356194490192345, 0.4787188805470161},
    {1.5707963267948966, -0.7853981633974483, 0.4787188805470161},
    {1.5707963267948966, -2.356194490192345, 0.4787188805470161},
    {0.9553166181245093, 0.7853981633974483, 0.4039190554615448},
    {0.9553166181245093, 2.356194490192345, 0.4039190554615448},
    {0.9553166181245093, -0.7853981633974483, 0.4039190554615448},
    {2.186276035465284, 0.7853981633974483, 0.4039190554615448},
    {0.9553166181245093, -2.356194490192345, 0.4039190554615448},
    {2.186276035465284, -0.7853981633974483, 0.4039190554615448},
    {2.186276035465284, 2.356194490192345, 0.4039190554615448},
    {2.186276035465284, -2.356194490192345, 0.4039190554615448},
};

const LebedevPoint kLebedev194[194] = {
    {1.5707963267948966, 0.0, 0.022397550621038466},
    {1.5707963267948966, 3.141592653589793, 0.022397550621038466},
    {1.5707963267948966, 1.5707963267948966, 0.022397550621038466},
    {1.5707963267948966, -1.5707963267948966, 0.022397550621038466},
    {0.0, 0.0, 0.022397550621038466},
    {3.141592653589793, 0.0, 0.022397550621038466},
    {0.7853981633974483, 1.5707963267948966, 0.07184075893484736},
    {0.7853981633974483, -1.5707963267948966, 0.07184075893484736},
    {2.356194490192345, 1.5707963267948966, 0.07184075893484736},
    {2.356194490192345, -1.5707963267948966, 0.07184075893484736},
    {0.7853981633974483, 0.0, 0.07184075893484736},
    {2.356194490192345, 0.0, 0.07184075893484736},
    {0.7853981633974483, 3.141592653589793, 0.07184075893484736},
    {2.356194490192345, 3.141592653589793, 0.07184075893484736},
    {1.5707963267948966, 0.7853981633974483, 0.07184075893484736},
    {1.5707963267948966, 2.356194490192345, 0.07184075893484736},
    {1.5707963267948966, -0.7853981633974483, 0.07184075893484736},
    {1.5707963267948966, -2.356194490192345, 0.07184075893484736},
    {0.9553166181245093, 0.7853981633974483, 0.07003719860124849},
    {0.9553166181245093, 2.356194490192345, 0.07003719860124849},
    {0.9553166181245093, -0.7853981633974483, 0.07003719860124849},
    {2.186276035465284, 0.7853981633974483, 0.07003719860124849},
    {0.9553166181245093, -2.356194490192345, 0.07003719860124849},
    {2.186276035465284, -0.7853981633974483, 0.07003719860124849},
    {2.186276035465284, 2.356194490192345, 0.07003719860124849},
    {2.186276035465284, -2.356194490192345, 0.07003719860124849},
    {1.2511856323329762, 0.7853981633974483, 0.07048105416807013},
    {1.2511856323329762, 2.356194490192345, 0.07048105416807013},
    {1.2511856323329762, -0.7853981633974483, 0.07048105416807013},
    {1.890407021256817, 0.7853981633974483, 0.07048105416807013},
    {1.2511856323329762, -2.356194490192345, 0.07048105416807013},
    {1.890407021256817, 2.356194490192345, 0.07048105416807013},
    {1.890407021256817, -0.7853981633974483, 0.07048105416807013},
    {1.890407021256817, -2.356194490192345, 0.07048105416807013},
    {0.8348385661418192, 2.7038347024438867, 0.07048105416807013},
    {0.8348385661418192, -0.43775795114590677, 0.07048105416807013},
    {2.306754087447974, 0.43775795114590677, 0.07048105416807013},
    {0.8348385661418192, -2.7038347024438867, 0.07048105416807013},
    {2.306754087447974, 2.7038347024438867, 0.07048105416807013},
    {2.306754087447974, -0.43775795114590677, 0.07048105416807013},
    {2.306754087447974, -2.7038347024438867, 0.07048105416807013},
    {0.8348385661418192, 0.43775795114590677, 0.07048105416807013},
    {0.8348385661418192, 1.13303837564899, 0.07048105416807013},
    {0.8348385661418192, 2.0085542779408034, 0.07048105416807013},
    {0.8348385661418192, -1.13303837564899, 0.07048105416807013},
    {2.306754087447974, 1.13303837564899, 0.07048105416807013},
    {0.8348385661418192, -2.0085542779408034, 0.07048105416807013},
    {2.306754087447974, 2.0085542779408034, 0.07048105416807013},
    {2.306754087447974, -1.13303837564899, 0.07048105416807013},
    {2.306754087447974, -2.0085542779408034, 0.07048105416807013},
    {0.4214197634066907, 0.7853981633974483, 0.06482032680351046},
    {0.4214197634066907, 2.356194490192345, 0.06482032680351046},
    {0.4214197634066907, -0.7853981633974483, 0.06482032680351046},
    {2.7201728901831026, 0.7853981633974483, 0.06482032680351046},
    {0.4214197634066907, -2.356194490192345, 0.06482032680351046},
    {2.7201728901831026, 2.356194490192345, 0.06482032680351046},
    {2.7201728901831026, -0.7853981633974483, 0.06482032680351046},
    {2.7201728901831026, -2.356194490192345, 0.06482032680351046},
    {1.2773566640691283, 1.8777568286983954, 0.06482032680351046},
    {1.2773566640691283, -1.263835824891398, 0.06482032680351046},
    {1.8642359895206648, 1.263835824891398, 0.06482032680351046},
    {1.2773566640691283, -1.8777568286983954, 0.06482032680351046},
    {1.8642359895206648, 1.8777568286983954, 0.06482032680351046},
    {1.8642359895206648, -1.263835824891398, 0.06482032680351046},
    {1.8642359895206648, -1.8777568286983954, 0.06482032680351046},
    {1.2773566640691283, 1.263835824891398, 0.06482032680351046},
    {1.2773566640691283, 0.3069605019034988, 0.06482032680351046},
    {1.2773566640691283, 2.8346321516862947, 0.06482032680351046},
    {1.2773566640691283, -0.3069605019034988, 0.06482032680351046},
    {1.8642359895206648, 0.3069605019034988, 0.06482032680351046},
    {1.2773566640691283, -2.8346321516862947, 0.06482032680351046},
    {1.8642359895206648, 2.8346321516862947, 0.06482032680351046},
    {1.8642359895206648, -0.3069605019034988, 0.06482032680351046},
    {1.8642359895206648, -2.8346321516862947, 0.06482032680351046},
    {0.6801264219219317, 0.7853981633974483, 0.069350927593711},
    {0.6801264219219317, 2.356194490192345, 0.069350927593711},
    {0.6801264219219317, -0.7853981633974483, 0.069350927593711},
    {2.4614662316678615, 0.7853981633974483, 0.069350927593711},
    {0.6801264219219317, -2.356194490192345, 0.069350927593711},
    {2.4614662316678615, 2.356194490192345, 0.069350927593711},
    {2.4614662316678615, -0.7853981633974483, 0.069350927593711},
    {2.4614662316678615, -2.356194490192345, 0.069350927593711},
    {1.10996449541479, 2.090341313444456, 0.069350927593711},
    {1.10996449541479, -1.0512513401453372, 0.069350927593711},
    {2.0316281581750033, 1.0512513401453372, 0.069350927593711},
    {1.10996449541479, -2.090341313444456, 0.069350927593711},
    {2.0316281581750033, 2.090341313444456, 0.069350927593711},
    {2.0316281581750033, -1.0512513401453372, 0.069350927593711},
    {2.0316281581750033, -2.090341313444456, 0.069350927593711},
    {1.10996449541479, 1.0512513401453372, 0.069350927593711},
    {1.10996449541479, 0.5195449866495595, 0.069350927593711},
    {1.10996449541479, 2.622047666940234, 0.069350927593711},
    {1.10996449541479, -0.5195449866495595, 0.069350927593711},
    {2.0316281581750033, 0.5195449866495595, 0.069350927593711},
    {1.10996449541479, -2.622047666940234, 0.069350927593711},
    {2.0316281581750033, 2.622047666940234, 0.069350927593711},
    {2.0316281581750033, -0.5195449866495595, 0.069350927593711},
    {2.0316281581750033, -2.622047666940234, 0.069350927593711},
    {0.18480390510717115, 0.7853981633974483, 0.05160728216651316},
    {0.18480390510717115, 2.356194490192345, 0.05160728216651316},
    {0.18480390510717115, -0.7853981633974483, 0.05160728216651316},
    {2.956788748482622, 0.7853981633974483, 0.05160728216651316},
    {0.18480390510717115, -2.356194490192345, 0.05160728216651316},
    {2.956788748482622, 2.356194490192345, 0.05160728216651316},
    {2.956788748482622, -0.7853981633974483, 0.05160728216651316},
    {2.956788748482622, -2.356194490192345, 0.05160728216651316},
    {1.4404943707983895, 1.702218765729298, 0.05160728216651316},
    {1.4404943707983895, -1.4393738878604954, 0.05160728216651316},
    {1.7010982827914038, 1.4393738878604954, 0.05160728216651316},
    {1.4404943707983895, -1.702218765729298, 0.05160728216651316},
    {1.7010982827914038, 1.702218765729298, 0.05160728216651316},
    {1.7010982827914038, -1.4393738878604954, 0.05160728216651316},
    {1.7010982827914038, -1.702218765729298, 0.05160728216651316},
    {1.4404943707983895, 1.4393738878604954, 0.05160728216651316},
    {1.4404943707983895, 0.13142243893440125, 0.05160728216651316},
    {1.4404943707983895, 3.010170214655392, 0.05160728216651316},
    {1.4404943707983895, -0.13142243893440125, 0.05160728216651316},
    {1.7010982827914038, 0.13142243893440125, 0.05160728216651316},
    {1.4404943707983895, -3.010170214655392, 0.05160728216651316},
    {1.7010982827914038, 3.010170214655392, 0.05160728216651316},
    {1.7010982827914038, -0.13142243893440125, 0.05160728216651316},
    {1.7010982827914038, -3.010170214655392, 0.05160728216651316},
    {1.5707963267948966, 1.2177368152555974, 0.06348336993464156},
    {1.5707963267948966, 1.923855838334196, 0.06348336993464156},
    {1.5707963267948966, -1.2177368152555974, 0.06348336993464156},
    {1.5707963267948966, -1.923855838334196, 0.06348336993464156},
    {1.5707963267948966, 0.3530595115392992, 0.06348336993464156},
    {1.5707963267948966, 2.788533142050494, 0.06348336993464156},
    {1.5707963267948966, -0.3530595115392992, 0.06348336993464156},
    {1.5707963267948966, -2.788533142050494, 0.06348336993464156},
    {0.3530595115392991, 0.0, 0.06348336993464156},
    {0.3530595115392991, 3.141592653589793, 0.06348336993464156},
    {2.788533142050494, 0.0, 0.06348336993464156},
    {2.788533142050494, 3.141592653589793, 0.06348336993464156},
    {1.2177368152555974, 0.0, 0.06348336993464156},
    {1.2177368152555974, 3.141592653589793, 0.06348336993464156},
    {1.923855838334196, 0.0, 0.06348336993464156},
    {1.923855838334196, 3.141592653589793, 0.06348336993464156},
    {0.3530595115392991, 1.5707963267948966, 0.06348336993464156},
    {0.3530595115392991, -1.5707963267948966, 0.06348336993464156},
    {2.788533142050494, 1.5707963267948966, 0.06348336993464156},
    {2.788533142050494, -1.5707963267948966, 0.06348336993464156},
    {1.2177368152555974, 1.5707963267948966, 0.06348336993464156},
    {1.2177368152555974, -1.5707963267948966, 0.06348336993464156},
    {1.923855838334196, 1.5707963267948966, 0.06348336993464156},
    {1.923855838334196, -1.5707963267948966, 0.06348336993464156},
    {1.0179418913750822, 1.3828094259298231, 0.06949515747104322},
    {1.0179418913750822, 1.75878322765997, 0.06949515747104322},
    {1.0179418913750822, -1.3828094259298231, 0.06949515747104322},
    {2.1236507622147114, 1.3828094259298231, 0.06949515747104322},
    {1.0179418913750822, -1.75878322765997, 0.06949515747104322},
    {2.1236507622147114, -1.3828094259298231, 0.06949515747104322},
    {2.1236507622147114, 1.75878322765997, 0.06949515747104322},
    {2.1236507622147114, -1.75878322765997, 0.06949515747104322},
    {1.0179418913750822, 0.18798690086507344, 0.06949515747104322},
    {1.0179418913750822, 2.95360575272472, 0.06949515747104322},
    {1.0179418913750822, -0.18798690086507344, 0.06949515747104322},
    {2.1236507622147114, 0.18798690086507344, 0.06949515747104322},
    {1.0179418913750822, -2.95360575272472, 0.06949515747104322},
    {2.1236507622147114, -0.18798690086507344, 0.06949515747104322},
    {2.1236507622147114, 2.95360575272472, 0.06949515747104322},
    {2.1236507622147114, -2.95360575272472, 0.06949515747104322},
    {0.580778034089788, 0.2940860780003485, 0.06949515747104322},
    {0.580778034089788, 2.8475065755894446, 0.06949515747104322},
    {0.580778034089788, -0.2940860780003485, 0.06949515747104322},
    {2.560814619500005, 0.2940860780003485, 0.06949515747104322},
    {0.580778034089788, -2.8475065755894446, 0.06949515747104322},
    {2.560814619500005, -0.2940860780003485, 0.06949515747104322},
    {2.560814619500005, 2.8475065755894446, 0.06949515747104322},
    {2.560814619500005, -2.8475065755894446, 0.06949515747104322},
    {1.4110763938431827, 1.00996717109303, 0.06949515747104322},
    {1.4110763938431827, 2.131625482496763, 0.06949515747104322},
    {1.4110763938431827, -1.00996717109303, 0.06949515747104322},
    {1.7305162597466106, 1.00996717109303, 0.06949515747104322},
    {1.4110763938431827, -2.131625482496763, 0.06949515747104322},
    {1.7305162597466106, -1.00996717109303, 0.06949515747104322},
    {1.7305162597466106, 2.131625482496763, 0.06949515747104322},
    {1.7305162597466106, -2.131625482496763, 0.06949515747104322},
    {0.580778034089788, 1.276710248794548, 0.06949515747104322},
    {0.580778034089788, 1.864882404795245, 0.06949515747104322},
    {0.580778034089788, -1.276710248794548, 0.06949515747104322},
    {2.560814619500005, 1.276710248794548, 0.06949515747104322},
    {0.580778034089788, -1.864882404795245, 0.06949515747104322},
    {2.560814619500005, -1.276710248794548, 0.06949515747104322},
    {2.560814619500005, 1.864882404795245, 0.06949515747104322},
    {2.560814619500005, -1.864882404795245, 0.06949515747104322},
    {1.4110763938431827, 0.5608291557018665, 0.06949515747104322},
    {1.4110763938431827, 2.5807634978879266, 0.06949515747104322},
    {1.4110763938431827, -0.5608291557018665, 0.06949515747104322},
    {1.7305162597466106, 0.5608291557018665, 0.06949515747104322},
    {1.4110763938431827, -2.5807634978879266, 0.06949515747104322},
    {1.7305162597466106, -0.5608291557018665, 0.06949515747104322},
    {1.7305162597466106, 2.5807634978879266, 0.06949515747104322},
    {1.7305162597466106, -2.5807634978879266, 0.06949515747104322},
};

const LebedevPoint kLebedev2702[2702] = {
    {1.5707963267948966, 0.0, 0.00037682463285563676},
    {1.5707963267948966, 3.141592653589793, 0.00037682463285563676},
    {1.5707963267948966, 1.5707963267948966, 0.00037682463285563676},
    {1.5707963267948966, -1.5707963267948966, 0.00037682463285563676},
    {0.0, 0.0, 0.00037682463285563676},
    {3.141592653589793, 0.0, 0.00037682463285563676},
    {0.9553166181245093, 0.7853981633974483, 0.0051243906727305565},
    {0.9553166181245093, 2.356194490192345, 0.0051243906727305565},
    {0.9553166181245093, -0.7853981633974483, 0.0051243906727305565},
    {2.186276035465284, 0.7853981633974483, 0.0051243906727305565},
    {0.9553166181245093, -2.356194490192345, 0.0051243906727305565},
    {2.186276035465284, -0.7853981633974483, 0.0051243906727305565},
    {2.186276035465284, 2.356194490192345, 0.0051243906727305565},
    {2.186276035465284, -2.356194490192345, 0.0051243906727305565},
    {0.029215621563914874, 0.7853981633974483, 0.0014895537260646084},
    {0.029215621563914874, 2.356194490192345, 0.0014895537260646084},
    {0.029215621563914874, -0.7853981633974483, 0.0014895537260646084},
    {3.1123770320258783, 0.7853981633974483, 0.0014895537260646084},
    {0.029215621563914874, -2.356194490192345, 0.0014895537260646084},
    {3.1123770320258783, 2.356194490192345, 0.0014895537260646084},
    {3.1123770320258783, -0.7853981633974483, 0.0014895537260646084},
    {3.1123770320258783, -2.356194490192345, 0.0014895537260646084},
    {1.5501392323208085, 1.591457830031791, 0.0014895537260646084},
    {1.5501392323208085, -1.5501348235580021, 0.0014895537260646084},
    {1.5914534212689848, 1.5501348235580021, 0.0014895537260646084},
    {1.5501392323208085, -1.591457830031791, 0.0014895537260646084},
    {1.5914534212689848, 1.591457830031791, 0.0014895537260646084},
    {1.5914534212689848, -1.5501348235580021, 0.0014895537260646084},
    {1.5914534212689848, -1.591457830031791, 0.0014895537260646084},
    {1.5501392323208085, 1.5501348235580021, 0.0014895537260646084},
    {1.5501392323208085, 0.020661503236894415, 0.0014895537260646084},
    {1.5501392323208085, 3.1209311503528987, 0.0014895537260646084},
    {1.5501392323208085, -0.020661503236894415, 0.0014895537260646084},
    {1.5914534212689848, 0.020661503236894415, 0.0014895537260646084},
    {1.5501392323208085, -3.1209311503528987, 0.0014895537260646084},
    {1.5914534212689848, 3.1209311503528987, 0.0014895537260646084},
    {1.5914534212689848, -0.020661503236894415, 0.0014895537260646084},
    {1.5914534212689848, -3.1209311503528987, 0.0014895537260646084},
    {0.07432761637391022, 0.7853981633974483, 0.0024044602150006204},
    {0.07432761637391022, 2.356194490192345, 0.0024044602150006204},
    {0.07432761637391022, -0.7853981633974483, 0.0024044602150006204},
    {3.067265037215883, 0.7853981633974483, 0.0024044602150006204},
    {0.07432761637391022, -2.356194490192345, 0.0024044602150006204},
    {3.067265037215883, 2.356194490192345, 0.0024044602150006204},
    {3.067265037215883, -0.7853981633974483, 0.0024044602150006204},
    {3.067265037215883, -2.356194490192345, 0.0024044602150006204},
    {1.518262985233144, 1.6234023082759939, 0.0024044602150006204},
    {1.518262985233144, -1.5181903453137993, 0.0024044602150006204},
    {1.6233296683566494, 1.5181903453137993, 0.0024044602150006204},
    {1.518262985233144, -1.6234023082759939, 0.0024044602150006204},
    {1.6233296683566494, 1.6234023082759939, 0.0024044602150006204},
    {1.6233296683566494, -1.5181903453137993, 0.0024044602150006204},
    {1.6233296683566494, -1.6234023082759939, 0.0024044602150006204},
    {1.518262985233144, 1.5181903453137993, 0.0024044602150006204},
    {1.518262985233144, 0.05260598148109734, 0.0024044602150006204},
    {1.518262985233144, 3.088986672108696, 0.0024044602150006204},
    {1.518262985233144, -0.05260598148109734, 0.0024044602150006204},
    {1.6233296683566494, 0.05260598148109734, 0.0024044602150006204},
    {1.518262985233144, -3.088986672108696, 0.0024044602150006204},
    {1.6233296683566494, 3.088986672108696, 0.0024044602150006204},
    {1.6233296683566494, -0.05260598148109734, 0.0024044602150006204},
    {1.6233296683566494, -3.088986672108696, 0.0024044602150006204},
    {0.12753244309985046, 0.7853981633974483, 0.00308238818042065},
    {0.12753244309985046, 2.356194490192345, 0.00308238818042065},
    {0.12753244309985046, -0.7853981633974483, 0.00308238818042065},
    {3.0140602104899425, 0.7853981633974483, 0.00308238818042065},
    {0.12753244309985046, -2.356194490192345, 0.00308238818042065},
    {3.0140602104899425, 2.356194490192345, 0.00308238818042065},
    {3.0140602104899425, -0.7853981633974483, 0.00308238818042065},
    {3.0140602104899425, -2.356194490192345, 0.00308238818042065},
    {1.4807398464380526, 1.6612202318715839, 0.00308238818042065},
    {1.4807398464380526, -1.4803724217182095, 0.00308238818042065},
    {1.6608528071517406, 1.4803724217182095, 0.00308238818042065},
    {1.4807398464380526, -1.6612202318715839, 0.00308238818042065},
    {1.6608528071517406, 1.6612202318715839, 0.00308238818042065},
    {1.6608528071517406, -1.4803724217182095, 0.00308238818042065},
    {1.6608528071517406, -1.6612202318715839, 0.00308238818042065},
    {1.4807398464380526, 1.4803724217182095, 0.00308238818042065},
    {1.4807398464380526, 0.09042390507668714, 0.00308238818042065},
    {1.4807398464380526, 3.0511687485131063, 0.00308238818042065},
    {1.4807398464380526, -0.09042390507668714, 0.00308238818042065},
    {1.6608528071517406, 0.09042390507668714, 0.00308238818042065},
    {1.4807398464380526, -3.0511687485131063, 0.00308238818042065},
    {1.6608528071517406, 3.0511687485131063, 0.00308238818042065},
    {1.6608528071517406, -0.09042390507668714, 0.00308238818042065},
    {1.6608528071517406, -3.0511687485131063, 0.00308238818042065},
    {0.1857662706724964, 0.7853981633974483, 0.003597008208078037},
    {0.1857662706724964, 2.356194490192345, 0.003597008208078037},
    {0.1857662706724964, -0.7853981633974483, 0.003597008208078037},
    {2.955826382917297, 0.7853981633974483, 0.003597008208078037},
    {0.1857662706724964, -2.356194490192345, 0.003597008208078037},
    {2.955826382917297, 2.356194490192345, 0.003597008208078037},
    {2.955826382917297, -0.7853981633974483, 0.003597008208078037},
    {2.955826382917297, -2.356194490192345, 0.003597008208078037},
    {1.4398197747541237, 1.7029110081523815, 0.003597008208078037},
    {1.4398197747541237, -1.4386816454374116, 0.003597008208078037},
    {1.7017728788356696, 1.4386816454374116, 0.003597008208078037},
    {1.4398197747541237, -1.7029110081523815, 0.003597008208078037},
    {1.7017728788356696, 1.7029110081523815, 0.003597008208078037},
    {1.7017728788356696, -1.4386816454374116, 0.003597008208078037},
    {1.7017728788356696, -1.7029110081523815, 0.003597008208078037},
    {1.4398197747541237, 1.4386816454374116, 0.003597008208078037},
    {1.4398197747541237, 0.13211468135748494, 0.003597008208078037},
    {1.4398197747541237, 3.0094779722323084, 0.003597008208078037},
    {1.4398197747541237, -0.13211468135748494, 0.003597008208078037},
    {1.7017728788356696, 0.13211468135748494, 0.003597008208078037},
    {1.4398197747541237, -3.0094779722323084, 0.003597008208078037},
    {1.7017728788356696, 3.0094779722323084, 0.003597008208078037},
    {1.7017728788356696, -0.13211468135748494, 0.003597008208078037},
    {1.7017728788356696, -3.0094779722323084, 0.003597008208078037},
    {0.2474684606977142, 0.7853981633974483, 0.003993633118165077},
    {0.2474684606977142, 2.356194490192345, 0.003993633118165077},
    {0.2474684606977142, -0.7853981633974483, 0.003993633118165077},
    {2.894124192892079, 0.7853981633974483, 0.003993633118165077},
    {0.2474684606977142, -2.356194490192345, 0.003993633118165077},
    {2.894124192892079, 2.356194490192345, 0.003993633118165077},
    {2.894124192892079, -0.7853981633974483, 0.003993633118165077},
    {2.894124192892079, -2.356194490192345, 0.003993633118165077},
    {1.3967123433589756, 1.7475798246387884, 0.003993633118165077},
    {1.3967123433589756, -1.394012828951005, 0.003993633118165077},
    {1.7448803102308177, 1.394012828951005, 0.003993633118165077},
    {1.3967123433589756, -1.7475798246387884, 0.003993633118165077},
    {1.7448803102308177, 1.7475798246387884, 0.003993633118165077},
    {1.7448803102308177, -1.394012828951005, 0.003993633118165077},
    {1.7448803102308177, -1.7475798246387884, 0.003993633118165077},
    {1.3967123433589756, 1.394012828951005, 0.003993633118165077},
    {1.3967123433589756, 0.1767834978438917, 0.003993633118165077},
    {1.3967123433589756, 2.9648091557459013, 0.003993633118165077},
    {1.3967123433589756, -0.1767834978438917, 0.003993633118165077},
    {1.7448803102308177, 0.1767834978438917, 0.003993633118165077},
    {1.3967123433589756, -2.9648091557459013, 0.003993633118165077},
    {1.7448803102308177, 2.9648091557459013, 0.003993633118165077},
    {1.7448803102308177, -0.1767834978438917, 0.003993633118165077},
    {1.7448803102308177, -2.9648091557459013, 0.003993633118165077},
    {0.3117285390396806, 0.7853981633974483, 0.0043014003852300045},
    {0.3117285390396806, 2.356194490192345, 0.0043014003852300045},
    {0.3117285390396806, -0.7853981633974483, 0.0043014003852300045},
    {2.8298641145501127, 0.7853981633974483, 0.0043014003852300045},
    {0.3117285390396806, -2.356194490192345, 0.0043014003852300045},
    {2.8298641145501127, 2.356194490192345, 0.0043014003852300045},
    {2.8298641145501127, -0.7853981633974483, 0.0043014003852300045},
    {2.8298641145501127, -2.356194490192345, 0.0043014003852300045},
    {1.3521865385961915, 1.794825749324522, 0.0043014003852300045},
    {1.3521865385961915, -1.3467669042652712, 0.0043014003852300045},
    {1.7894061149936018, 1.3467669042652712, 0.0043014003852300045},
    {1.3521865385961915, -1.794825749324522, 0.0043014003852300045},
    {1.7894061149936018, 1.794825749324522, 0.0043014003852300045},
    {1.7894061149936018, -1.3467669042652712, 0.0043014003852300045},
    {1.7894061149936018, -1.794825749324522, 0.0043014003852300045},
    {1.3521865385961915, 1.3467669042652712, 0.0043014003852300045},
    {1.3521865385961915, 0.2240294225296255, 0.0043014003852300045},
    {1.3521865385961915, 2.917563231060168, 0.0043014003852300045},
    {1.3521865385961915, -0.2240294225296255, 0.0043014003852300045},
    {1.7894061149936018, 0.2240294225296255, 0.0043014003852300045},
    {1.3521865385961915, -2.917563231060168, 0.0043014003852300045},
    {1.7894061149936018, 2.917563231060168, 0.0043014003852300045},
    {1.7894061149936018, -0.2240294225296255, 0.0043014003852300045},
    {1.7894061149936018, -2.917563231060168, 0.0043014003852300045},
    {0.3779791621045765, 0.7853981633974483, 0.004539966462932808},
    {0.3779791621045765, 2.356194490192345, 0.004539966462932808},
    {0.3779791621045765, -0.7853981633974483, 0.004539966462932808},
    {2.763613491485217, 0.7853981633974483, 0.004539966462932808},
    {0.3779791621045765, -2.356194490192345, 0.004539966462932808},
    {2.763613491485217, 2.356194490192345, 0.004539966462932808},
    {2.763613491485217, -0.7853981633974483, 0.004539966462932808},
    {2.763613491485217, -2.356194490192345, 0.004539966462932808},
    {1.306787225393797, 1.844520640093338, 0.004539966462932808},
    {1.306787225393797, -1.297072013496455, 0.004539966462932808},
    {1.8348054281959962, 1.297072013496455, 0.004539966462932808},
    {1.306787225393797, -1.844520640093338, 0.004539966462932808},
    {1.8348054281959962, 1.844520640093338, 0.004539966462932808},
    {1.8348054281959962, -1.297072013496455, 0.004539966462932808},
    {1.8348054281959962, -1.844520640093338, 0.004539966462932808},
    {1.306787225393797, 1.297072013496455, 0.004539966462932808},
    {1.306787225393797, 0.27372431329844155, 0.004539966462932808},
    {1.306787225393797, 2.8678683402913516, 0.004539966462932808},
    {1.306787225393797, -0.27372431329844155, 0.004539966462932808},
    {1.8348054281959962, 0.27372431329844155, 0.004539966462932808},
    {1.306787225393797, -2.8678683402913516, 0.004539966462932808},
    {1.8348054281959962, 2.8678683402913516, 0.004539966462932808},
    {1.8348054281959962, -0.27372431329844155, 0.004539966462932808},
    {1.8348054281959962, -2.8678683402913516, 0.004539966462932808},
    {0.4458550327978899, 0.7853981633974483, 0.0047232441001198435},
    {0.4458550327978899, 2.356194490192345, 0.0047232441001198435},
    {0.4458550327978899, -0.7853981633974483, 0.0047232441001198435},
    {2.6957376207919035, 0.7853981633974483, 0.0047232441001198435},
    {0.4458550327978899, -2.356194490192345, 0.0047232441001198435},
    {2.6957376207919035, 2.356194490192345, 0.0047232441001198435},
    {2.6957376207919035, -0.7853981633974483, 0.0047232441001198435},
    {2.6957376207919035, -2.356194490192345, 0.0047232441001198435},
    {1.2609363414536252, 1.896708559093574, 0.0047232441001198435},
    {1.2609363414536252, -1.2448840944962194, 0.0047232441001198435},
    {1.8806563121361681, 1.2448840944962194, 0.0047232441001198435},
    {1.2609363414536252, -1.896708559093574, 0.0047232441001198435},
    {1.8806563121361681, 1.896708559093574, 0.0047232441001198435},
    {1.8806563121361681, -1.2448840944962194, 0.0047232441001198435},
    {1.8806563121361681, -1.896708559093574, 0.0047232441001198435},
    {1.2609363414536252, 1.2448840944962194, 0.0047232441001198435},
    {1.2609363414536252, 0.3259122322986773, 0.0047232441001198435},
    {1.2609363414536252, 2.815680421291116, 0.0047232441001198435},
    {1.2609363414536252, -0.3259122322986773, 0.0047232441001198435},
    {1.8806563121361681, 0.3259122322986773, 0.0047232441001198435},
    {1.2609363414536252, -2.815680421291116, 0.0047232441001198435},
    {1.8806563121361681, 2.815680421291116, 0.0047232441001198435},
    {1.8806563121361681, -0.3259122322986773, 0.0047232441001198435},
    {1.8806563121361681, -2.815680421291116, 0.0047232441001198435},
    {0.5151197364188065, 0.7853981633974483, 0.004861566626461833},
    {0.5151197364188065, 2.356194490192345, 0.004861566626461833},
    {0.5151197364188065, -0.7853981633974483, 0.004861566626461833},
    {2.626472917170987, 0.7853981633974483, 0.004861566626461833},
    {0.5151197364188065, -2.356194490192345, 0.004861566626461833},
    {2.626472917170987, 2.356194490192345, 0.004861566626461833},
    {2.626472917170987, -0.7853981633974483, 0.004861566626461833},
    {2.626472917170987, -2.356194490192345, 0.004861566626461833},
    {1.2149877467043169, 1.9515552038212796, 0.004861566626461833},
    {1.2149877467043169, -1.1900374497685138, 0.004861566626461833},
    {1.9266049068854763, 1.1900374497685138, 0.004861566626461833},
    {1.2149877467043169, -1.9515552038212796, 0.004861566626461833},
    {1.9266049068854763, 1.9515552038212796, 0.004861566626461833},
    {1.9266049068854763, -1.1900374497685138, 0.004861566626461833},
    {1.9266049068854763, -1.9515552038212796, 0.004861566626461833},
    {1.2149877467043169, 1.1900374497685138, 0.004861566626461833},
    {1.2149877467043169, 0.38075887702638295, 0.004861566626461833},
    {1.2149877467043169, 2.7608337765634103, 0.004861566626461833},
    {1.2149877467043169, -0.38075887702638295, 0.004861566626461833},
    {1.9266049068854763, 0.38075887702638295, 0.004861566626461833},
    {1.2149877467043169, -2.7608337765634103, 0.004861566626461833},
    {1.9266049068854763, 2.7608337765634103, 0.004861566626461833},
    {1.9266049068854763, -0.38075887702638295, 0.004861566626461833},
    {1.9266049068854763, -2.7608337765634103, 0.004861566626461833},
    {0.585624747515263, 0.7853981633974483, 0.0049630000255908545},
    {0.585624747515263, 2.356194490192345, 0.0049630000255908545},
    {0.585624747515263, -0.7853981633974483, 0.0049630000255908545},
    {2.55596790607453, 0.7853981633974483, 0.0049630000255908545},
    {0.585624747515263, -2.356194490192345, 0.0049630000255908545},
    {2.55596790607453, 2.356194490192345, 0.0049630000255908545},
    {2.55596790607453, -0.7853981633974483, 0.0049630000255908545},
    {2.55596790607453, -2.356194490192345, 0.0049630000255908545},
    {1.1692608451781532, 2.0093211696104283, 0.0049630000255908545},
    {1.1692608451781532, -1.1322714839793648, 0.0049630000255908545},
    {1.97233180841164, 1.1322714839793648, 0.0049630000255908545},
    {1.1692608451781532, -2.0093211696104283, 0.0049630000255908545},
    {1.97233180841164, 2.0093211696104283, 0.0049630000255908545},
    {1.97233180841164, -1.1322714839793648, 0.0049630000255908545},
    {1.97233180841164, -2.0093211696104283, 0.0049630000255908545},
    {1.1692608451781532, 1.1322714839793648, 0.0049630000255908545},
    {1.1692608451781532, 0.4385248428155318, 0.0049630000255908545},
    {1.1692608451781532, 2.7030678107742614, 0.0049630000255908545},
    {1.1692608451781532, -0.4385248428155318, 0.0049630000255908545},
    {1.97233180841164, 0.4385248428155318, 0.0049630000255908545},
    {1.1692608451781532, -2.7030678107742614, 0.0049630000255908545},
    {1.97233180841164, 2.7030678107742614, 0.0049630000255908545},
    {1.97233180841164, -0.4385248428155318, 0.0049630000255908545},
    {1.97233180841164, -2.7030678107742614, 0.0049630000255908545},
    {0.6572852546659422, 0.7853981633974483, 0.005034173654572665},
    {0.6572852546659422, 2.356194490192345, 0.005034173654572665},
    {0.6572852546659422, -0.7853981633974483, 0.005034173654572665},
    {2.484307398923851, 0.7853981633974483, 0.005034173654572665},
    {0.6572852546659422, -2.356194490192345, 0.005034173654572665},
    {2.484307398923851, 2.356194490192345, 0.005034173654572665},
    {2.484307398923851, -0.7853981633974483, 0.005034173654572665},
    {2.484307398923851, -2.356194490192345, 0.005034173654572665},
    {1.1240638260024545, 2.070347328751823, 0.005034173654572665},
    {1.1240638260024545, -1.07124532483797, 0.005034173654572665},
    {2.0175288275873386, 1.07124532483797, 0.005034173654572665},
    {1.1240638260024545, -2.070347328751823, 0.005034173654572665},
    {2.0175288275873386, 2.070347328751823, 0.005034173654572665},
    {2.0175288275873386, -1.07124532483797, 0.005034173654572665},
    {2.0175288275873386, -2.070347328751823, 0.005034173654572665},
    {1.1240638260024545, 1.07124532483797, 0.005034173654572665},
    {1.1240638260024545, 0.4995510019569266, 0.005034173654572665},
    {1.1240638260024545, 2.6420416516328666, 0.005034173654572665},
    {1.1240638260024545, -0.4995510019569266, 0.005034173654572665},
    {2.0175288275873386, 0.4995510019569266, 0.005034173654572665},
    {1.1240638260024545, -2.6420416516328666, 0.005034173654572665},
    {2.0175288275873386, 2.6420416516328666, 0.005034173654572665},
    {2.0175288275873386, -0.4995510019569266, 0.005034173654572665},
    {2.0175288275873386, -2.6420416516328666, 0.005034173654572665},
    {0.7300653603141921, 0.7853981633974483, 0.0050808251017855},
    {0.7300653603141921, 2.356194490192345, 0.0050808251017855},
    {0.7300653603141921, -0.7853981633974483, 0.0050808251017855},
    {2.411527293275601, 0.7853981633974483, 0.0050808251017855},
    {0.7300653603141921, -2.356194490192345, 0.0050808251017855},
    {2.411527293275601, 2.356194490192345, 0.0050808251017855},
    {2.411527293275601, -0.7853981633974483, 0.0050808251017855},
    {2.411527293275601, -2.356194490192345, 0.0050808251017855},
    {1.0797118513108943, 2.1350460206597415, 0.0050808251017855},
    {1.0797118513108943, -1.0065466329300516, 0.0050808251017855},
    {2.061880802278899, 1.0065466329300516, 0.0050808251017855},
    {1.0797118513108943, -2.1350460206597415, 0.0050808251017855},
    {2.061880802278899, 2.1350460206597415, 0.0050808251017855},
    {2.061880802278899, -1.0065466329300516, 0.0050808251017855},
    {2.061880802278899, -2.1350460206597415, 0.0050808251017855},
    {1.0797118513108943, 1.0065466329300516, 0.0050808251017855},
    {1.0797118513108943, 0.564249693864845, 0.0050808251017855},
    {1.0797118513108943, 2.577342959724948, 0.0050808251017855},
    {1.0797118513108943, -0.564249693864845, 0.0050808251017855},
    {2.061880802278899, 0.564249693864845, 0.0050808251017855},
    {1.0797118513108943, -2.577342959724948, 0.0050808251017855},
    {2.061880802278899, 2.577342959724948, 0.0050808251017855},
    {2.061880802278899, -0.564249693864845, 0.0050808251017855},
    {2.061880802278899, -2.577342959724948, 0.0050808251017855},
    {0.8039686154571555, 0.7853981633974483, 0.005108163676023554},
    {0.8039686154571555, 2.356194490192345, 0.005108163676023554},
    {0.8039686154571555, -0.7853981633974483, 0.005108163676023554},
    {2.337624038132638, 0.7853981633974483, 0.005108163676023554},
    {0.8039686154571555, -2.356194490192345, 0.005108163676023554},
    {2.337624038132638, 2.356194490192345, 0.005108163676023554},
    {2.337624038132638, -0.7853981633974483, 0.005108163676023554},
    {2.337624038132638, -2.356194490192345, 0.005108163676023554},
    {1.0365430911200184, 2.2038936953411894, 0.005108163676023554},
    {1.0365430911200184, -0.9376989582486037, 0.005108163676023554},
    {2.105049562469775, 0.9376989582486037, 0.005108163676023554},
    {1.0365430911200184, -2.2038936953411894, 0.005108163676023554},
    {2.105049562469775, 2.2038936953411894, 0.005108163676023554},
    {2.105049562469775, -0.9376989582486037, 0.005108163676023554},
    {2.105049562469775, -2.2038936953411894, 0.005108163676023554},
    {1.0365430911200184, 0.9376989582486037, 0.005108163676023554},
    {1.0365430911200184, 0.633097368546293, 0.005108163676023554},
    {1.0365430911200184, 2.5084952850435003, 0.005108163676023554},
    {1.0365430911200184, -0.633097368546293, 0.005108163676023554},
    {2.105049562469775, 0.633097368546293, 0.005108163676023554},
    {1.0365430911200184, -2.5084952850435003, 0.005108163676023554},
    {2.105049562469775, 2.5084952850435003, 0.005108163676023554},
    {2.105049562469775, -0.633097368546293, 0.005108163676023554},
    {2.105049562469775, -2.5084952850435003, 0.005108163676023554},
    {0.8790313323525601, 0.7853981633974483, 0.005121104680311592},
    {0.8790313323525601, 2.356194490192345, 0.005121104680311592},
    {0.8790313323525601, -0.7853981633974483, 0.005121104680311592},
    {2.262561321237233, 0.7853981633974483, 0.005121104680311592},
    {0.8790313323525601, -2.356194490192345, 0.005121104680311592},
    {2.262561321237233, 2.356194490192345, 0.005121104680311592},
    {2.262561321237233, -0.7853981633974483, 0.005121104680311592},
    {2.262561321237233, -2.356194490192345, 0.005121104680311592},
    {0.9949342764172362, 2.277420888385795, 0.005121104680311592},
    {0.9949342764172362, -0.8641717652039984, 0.005121104680311592},
    {2.146658377172557, 0.8641717652039984, 0.005121104680311592},
    {0.9949342764172362, -2.277420888385795, 0.005121104680311592},
    {2.146658377172557, 2.277420888385795, 0.005121104680311592},
    {2.146658377172557, -0.8641717652039984, 0.005121104680311592},
    {2.146658377172557, -2.277420888385795, 0.005121104680311592},
    {0.9949342764172362, 0.8641717652039984, 0.005121104680311592},
    {0.9949342764172362, 0.7066245615908983, 0.005121104680311592},
    {0.9949342764172362, 2.434968091998895, 0.005121104680311592},
    {0.9949342764172362, -0.7066245615908983, 0.005121104680311592},
    {2.146658377172557, 0.7066245615908983, 0.005121104680311592},
    {0.9949342764172362, -2.434968091998895, 0.005121104680311592},
    {2.146658377172557, 2.434968091998895, 0.005121104680311592},
    {2.146658377172557, -0.7066245615908983, 0.005121104680311592},
    {2.146658377172557, -2.434968091998895, 0.005121104680311592},
    {1.0329069257189714, 0.7853981633974483, 0.005122584899596687},
    {1.0329069257189714, 2.356194490192345, 0.005122584899596687},
    {1.0329069257189714, -0.7853981633974483, 0.005122584899596687},
    {2.1086857278708218, 0.7853981633974483, 0.005122584899596687},
    {1.0329069257189714, -2.356194490192345, 0.005122584899596687},
    {2.1086857278708218, 2.356194490192345, 0.005122584899596687},
    {2.1086857278708218, -0.7853981633974483, 0.005122584899596687},
    {2.1086857278708218, -2.356194490192345, 0.005122584899596687},
    {0.9181920424579446, 2.4407853958170165, 0.005122584899596687},
    {0.9181920424579446, -0.7008072577727765, 0.005122584899596687},
    {2.223400611131849, 0.7008072577727765, 0.005122584899596687},
    {0.9181920424579446, -2.4407853958170165, 0.005122584899596687},
    {2.223400611131849, 2.4407853958170165, 0.005122584899596687},
    {2.223400611131849, -0.7008072577727765, 0.005122584899596687},
    {2.223400611131849, -2.4407853958170165, 0.005122584899596687},
    {0.9181920424579446, 0.7008072577727765, 0.005122584899596687},
    {0.9181920424579446, 0.8699890690221201, 0.005122584899596687},
    {0.9181920424579446, 2.271603584567673, 0.005122584899596687},
    {0.9181920424579446, -0.8699890690221201, 0.005122584899596687},
    {2.223400611131849, 0.8699890690221201, 0.005122584899596687},
    {0.9181920424579446, -2.271603584567673, 0.005122584899596687},
    {2.223400611131849, 2.271603584567673, 0.005122584899596687},
    {2.223400611131849, -0.8699890690221201, 0.005122584899596687},
    {2.223400611131849, -2.271603584567673, 0.005122584899596687},
    {1.1118922596842804, 0.7853981633974483, 0.005119892330204389},
    {1.1118922596842804, 2.356194490192345, 0.005119892330204389},
    {1.1118922596842804, -0.7853981633974483, 0.005119892330204389},
    {2.0297003939055127, 0.7853981633974483, 0.005119892330204389},
    {1.1118922596842804, -2.356194490192345, 0.005119892330204389},
    {2.0297003939055127, 2.356194490192345, 0.005119892330204389},
    {2.0297003939055127, -0.7853981633974483, 0.005119892330204389},
    {2.0297003939055127, -2.356194490192345, 0.005119892330204389},
    {0.8841482541436712, 2.531712099499174, 0.005119892330204389},
    {0.8841482541436712, -0.6098805540906191, 0.005119892330204389},
    {2.257444399446122, 0.6098805540906191, 0.005119892330204389},
    {0.8841482541436712, -2.531712099499174, 0.005119892330204389},
    {2.257444399446122, 2.531712099499174, 0.005119892330204389},
    {2.257444399446122, -0.6098805540906191, 0.005119892330204389},
    {2.257444399446122, -2.531712099499174, 0.005119892330204389},
    {0.8841482541436712, 0.6098805540906191, 0.005119892330204389},
    {0.8841482541436712, 0.9609157727042775, 0.005119892330204389},
    {0.8841482541436712, 2.1806768808855157, 0.005119892330204389},
    {0.8841482541436712, -0.9609157727042775, 0.005119892330204389},
    {2.257444399446122, 0.9609157727042775, 0.005119892330204389},
    {0.8841482541436712, -2.1806768808855157, 0.005119892330204389},
    {2.257444399446122, 2.1806768808855157, 0.005119892330204389},
    {2.257444399446122, -0.9609157727042775, 0.005119892330204389},
    {2.257444399446122, -2.1806768808855157, 0.005119892330204389},
    {1.1923502266435637, 0.7853981633974483, 0.005119745170163946},
    {1.1923502266435637, 2.356194490192345, 0.005119745170163946},
    {1.1923502266435637, -0.7853981633974483, 0.005119745170163946},
    {1.9492424269462294, 0.7853981633974483, 0.005119745170163946},
    {1.1923502266435637, -2.356194490192345, 0.005119745170163946},
    {1.9492424269462294, 2.356194490192345, 0.005119745170163946},
    {1.9492424269462294, -0.7853981633974483, 0.005119745170163946},
    {1.9492424269462294, -2.356194490192345, 0.005119745170163946},
    {0.85386858055397, 2.6293487953799763, 0.005119745170163946},
    {0.85386858055397, -0.5122438582098168, 0.005119745170163946},
    {2.2877240730358235, 0.5122438582098168, 0.005119745170163946},
    {0.85386858055397, -2.6293487953799763, 0.005119745170163946},
    {2.2877240730358235, 2.6293487953799763, 0.005119745170163946},
    {2.2877240730358235, -0.5122438582098168, 0.005119745170163946},
    {2.2877240730358235, -2.6293487953799763, 0.005119745170163946},
    {0.85386858055397, 0.5122438582098168, 0.005119745170163946},
    {0.85386858055397, 1.0585524685850798, 0.005119745170163946},
    {0.85386858055397, 2.0830401850047133, 0.005119745170163946},
    {0.85386858055397, -1.0585524685850798, 0.005119745170163946},
    {2.2877240730358235, 1.0585524685850798, 0.005119745170163946},
    {0.85386858055397, -2.0830401850047133, 0.005119745170163946},
    {2.2877240730358235, 2.0830401850047133, 0.005119745170163946},
    {2.2877240730358235, -1.0585524685850798, 0.005119745170163946},
    {2.2877240730358235, -2.0830401850047133, 0.005119745170163946},
    {1.2743136900044496, 0.7853981633974483, 0.005124123342768978},
    {1.2743136900044496, 2.356194490192345, 0.005124123342768978},
    {1.2743136900044496, -0.7853981633974483, 0.005124123342768978},
    {1.8672789635853435, 0.7853981633974483, 0.005124123342768978},
    {1.2743136900044496, -2.356194490192345, 0.005124123342768978},
    {1.8672789635853435, 2.356194490192345, 0.005124123342768978},
    {1.8672789635853435, -0.7853981633974483, 0.005124123342768978},
    {1.8672789635853435, -2.356194490192345, 0.005124123342768978},
    {0.8281283410911312, 2.7337884207434797, 0.005124123342768978},
    {0.8281283410911312, -0.4078042328463137, 0.005124123342768978},
    {2.3134643124986622, 0.4078042328463137, 0.005124123342768978},
    {0.8281283410911312, -2.7337884207434797, 0.005124123342768978},
    {2.3134643124986622, 2.7337884207434797, 0.005124123342768978},
    {2.3134643124986622, -0.4078042328463137, 0.005124123342768978},
    {2.3134643124986622, -2.7337884207434797, 0.005124123342768978},
    {0.8281283410911312, 0.4078042328463137, 0.005124123342768978},
    {0.8281283410911312, 1.162992093948583, 0.005124123342768978},
    {0.8281283410911312, 1.9786005596412104, 0.005124123342768978},
    {0.8281283410911312, -1.162992093948583, 0.005124123342768978},
    {2.3134643124986622, 1.162992093948583, 0.005124123342768978},
    {0.8281283410911312, -1.9786005596412104, 0.005124123342768978},
    {2.3134643124986622, 1.9786005596412104, 0.005124123342768978},
    {2.3134643124986622, -1.162992093948583, 0.005124123342768978},
    {2.3134643124986622, -1.9786005596412104, 0.005124123342768978},
    {1.3577240825942358, 0.7853981633974483, 0.005132756134912063},
    {1.3577240825942358, 2.356194490192345, 0.005132756134912063},
    {1.3577240825942358, -0.7853981633974483, 0.005132756134912063},
    {1.7838685709955575, 0.7853981633974483, 0.005132756134912063},
    {1.3577240825942358, -2.356194490192345, 0.005132756134912063},
    {1.7838685709955575, 2.356194490192345, 0.005132756134912063},
    {1.7838685709955575, -0.7853981633974483, 0.005132756134912063},
    {1.7838685709955575, -2.356194490192345, 0.005132756134912063},
    {0.8077640614203834, 2.8446640677227535, 0.005132756134912063},
    {0.8077640614203834, -0.29692858586703996, 0.005132756134912063},
    {2.33382859216941, 0.29692858586703996, 0.005132756134912063},
    {0.8077640614203834, -2.8446640677227535, 0.005132756134912063},
    {2.33382859216941, 2.8446640677227535, 0.005132756134912063},
    {2.33382859216941, -0.29692858586703996, 0.005132756134912063},
    {2.33382859216941, -2.8446640677227535, 0.005132756134912063},
    {0.8077640614203834, 0.29692858586703996, 0.005132756134912063},
    {0.8077640614203834, 1.2738677409278567, 0.005132756134912063},
    {0.8077640614203834, 1.8677249126619366, 0.005132756134912063},
    {0.8077640614203834, -1.2738677409278567, 0.005132756134912063},
    {2.33382859216941, 1.2738677409278567, 0.005132756134912063},
    {0.8077640614203834, -1.8677249126619366, 0.005132756134912063},
    {2.33382859216941, 1.8677249126619366, 0.005132756134912063},
    {2.33382859216941, -1.2738677409278567, 0.005132756134912063},
    {2.33382859216941, -1.8677249126619366, 0.005132756134912063},
    {1.4423773912175544, 0.7853981633974483, 0.005142747538618489},
    {1.4423773912175544, 2.356194490192345, 0.005142747538618489},
    {1.4423773912175544, -0.7853981633974483, 0.005142747538618489},
    {1.699215262372239, 0.7853981633974483, 0.005142747538618489},
    {1.4423773912175544, -2.356194490192345, 0.005142747538618489},
    {1.699215262372239, 2.356194490192345, 0.005142747538618489},
    {1.699215262372239, -0.7853981633974483, 0.005142747538618489},
    {1.699215262372239, -2.356194490192345, 0.005142747538618489},
    {0.793599014306266, 2.9609662234731338, 0.005142747538618489},
    {0.793599014306266, -0.18062643011665935, 0.005142747538618489},
    {2.3479936392835272, 0.18062643011665935, 0.005142747538618489},
    {0.793599014306266, -2.9609662234731338, 0.005142747538618489},
    {2.3479936392835272, 2.9609662234731338, 0.005142747538618489},
    {2.3479936392835272, -0.18062643011665935, 0.005142747538618489},
    {2.3479936392835272, -2.9609662234731338, 0.005142747538618489},
    {0.793599014306266, 0.18062643011665935, 0.005142747538618489},
    {0.793599014306266, 1.3901698966782372, 0.005142747538618489},
    {0.793599014306266, 1.751422756911556, 0.005142747538618489},
    {0.793599014306266, -1.3901698966782372, 0.005142747538618489},
    {2.3479936392835272, 1.3901698966782372, 0.005142747538618489},
    {0.793599014306266, -1.751422756911556, 0.005142747538618489},
    {2.3479936392835272, 1.751422756911556, 0.005142747538618489},
    {2.3479936392835272, -1.3901698966782372, 0.005142747538618489},
    {2.3479936392835272, -1.751422756911556, 0.005142747538618489},
    {1.5278874066219779, 0.7853981633974483, 0.005149538691832918},
    {1.5278874066219779, 2.356194490192345, 0.005149538691832918},
    {1.5278874066219779, -0.7853981633974483, 0.005149538691832918},
    {1.6137052469678155, 0.7853981633974483, 0.005149538691832918},
    {1.5278874066219779, -2.356194490192345, 0.005149538691832918},
    {1.6137052469678155, 2.356194490192345, 0.005149538691832918},
    {1.6137052469678155, -0.7853981633974483, 0.005149538691832918},
    {1.6137052469678155, -2.356194490192345, 0.005149538691832918},
    {0.7863181867826692, 3.0809474642716337, 0.005149538691832918},
    {0.7863181867826692, -0.06064518931815953, 0.005149538691832918},
    {2.355274466807124, 0.06064518931815953, 0.005149538691832918},
    {0.7863181867826692, -3.0809474642716337, 0.005149538691832918},
    {2.355274466807124, 3.0809474642716337, 0.005149538691832918},
    {2.355274466807124, -0.06064518931815953, 0.005149538691832918},
    {2.355274466807124, -3.0809474642716337, 0.005149538691832918},
    {0.7863181867826692, 0.06064518931815953, 0.005149538691832918},
    {0.7863181867826692, 1.5101511374767371, 0.005149538691832918},
    {0.7863181867826692, 1.6314415161130562, 0.005149538691832918},
    {0.7863181867826692, -1.5101511374767371, 0.005149538691832918},
    {2.355274466807124, 1.5101511374767371, 0.005149538691832918},
    {0.7863181867826692, -1.6314415161130562, 0.005149538691832918},
    {2.355274466807124, 1.6314415161130562, 0.005149538691832918},
    {2.355274466807124, -1.5101511374767371, 0.005149538691832918},
    {2.355274466807124, -1.6314415161130562, 0.005149538691832918},
    {1.5707963267948966, 1.5095224420725317, 0.002185275276987087},
    {1.5707963267948966, 1.6320702115172614, 0.002185275276987087},
    {1.5707963267948966, -1.5095224420725317, 0.002185275276987087},
    {1.5707963267948966, -1.6320702115172614, 0.002185275276987087},
    {1.5707963267948966, 0.061273884722364856, 0.002185275276987087},
    {1.5707963267948966, 3.0803187688674285, 0.002185275276987087},
    {1.5707963267948966, -0.061273884722364856, 0.002185275276987087},
    {1.5707963267948966, -3.0803187688674285, 0.002185275276987087},
    {0.061273884722364856, 0.0, 0.002185275276987087},
    {0.061273884722364856, 3.141592653589793, 0.002185275276987087},
    {3.0803187688674285, 0.0, 0.002185275276987087},
    {3.0803187688674285, 3.141592653589793, 0.002185275276987087},
    {1.5095224420725317, 0.0, 0.002185275276987087},
    {1.5095224420725317, 3.141592653589793, 0.002185275276987087},
    {1.6320702115172614, 0.0, 0.002185275276987087},
    {1.6320702115172614, 3.141592653589793, 0.002185275276987087},
    {0.061273884722364856, 1.5707963267948966, 0.002185275276987087},
    {0.061273884722364856, -1.5707963267948966, 0.002185275276987087},
    {3.0803187688674285, 1.5707963267948966, 0.002185275276987087},
    {3.0803187688674285, -1.5707963267948966, 0.002185275276987087},
    {1.5095224420725317, 1.5707963267948966, 0.002185275276987087},
    {1.5095224420725317, -1.5707963267948966, 0.002185275276987087},
    {1.6320702115172614, 1.5707963267948966, 0.002185275276987087},
    {1.6320702115172614, -1.5707963267948966, 0.002185275276987087},
    {1.5707963267948966, 1.4168823198232499, 0.003342172091688715},
    {1.5707963267948966, 1.7247103337665433, 0.003342172091688715},
    {1.5707963267948966, -1.4168823198232499, 0.003342172091688715},
    {1.5707963267948966, -1.7247103337665433, 0.003342172091688715},
    {1.5707963267948966, 0.15391400697164667, 0.003342172091688715},
    {1.5707963267948966, 2.9876786466181464, 0.003342172091688715},
    {1.5707963267948966, -0.15391400697164667, 0.003342172091688715},
    {1.5707963267948966, -2.9876786466181464, 0.003342172091688715},
    {0.1539140069716466, 0.0, 0.003342172091688715},
    {0.1539140069716466, 3.141592653589793, 0.003342172091688715},
    {2.987678646618147, 0.0, 0.003342172091688715},
    {2.987678646618147, 3.141592653589793, 0.003342172091688715},
    {1.4168823198232499, 0.0, 0.003342172091688715},
    {1.4168823198232499, 3.141592653589793, 0.003342172091688715},
    {1.7247103337665433, 0.0, 0.003342172091688715},
    {1.7247103337665433, 3.141592653589793, 0.003342172091688715},
    {0.1539140069716466, 1.5707963267948966, 0.003342172091688715},
    {0.1539140069716466, -1.5707963267948966, 0.003342172091688715},
    {2.987678646618147, 1.5707963267948966, 0.003342172091688715},
    {2.987678646618147, -1.5707963267948966, 0.003342172091688715},
    {1.4168823198232499, 1.5707963267948966, 0.003342172091688715},
    {1.4168823198232499, -1.5707963267948966, 0.003342172091688715},
    {1.7247103337665433, 1.5707963267948966, 0.003342172091688715},
    {1.7247103337665433, -1.5707963267948966, 0.003342172091688715},
    {1.5707963267948966, 1.311510557975143, 0.004072253045009639},
    {1.5707963267948966, 1.8300820956146504, 0.004072253045009639},
    {1.5707963267948966, -1.311510557975143, 0.004072253045009639},
    {1.5707963267948966, -1.8300820956146504, 0.004072253045009639},
    {1.5707963267948966, 0.25928576881975374, 0.004072253045009639},
    {1.5707963267948966, 2.8823068847700397, 0.004072253045009639},
    {1.5707963267948966, -0.25928576881975374, 0.004072253045009639},
    {1.5707963267948966, -2.8823068847700397, 0.004072253045009639},
    {0.2592857688197538, 0.0, 0.004072253045009639},
    {0.2592857688197538, 3.141592653589793, 0.004072253045009639},
    {2.8823068847700393, 0.0, 0.004072253045009639},
    {2.8823068847700393, 3.141592653589793, 0.004072253045009639},
    {1.311510557975143, 0.0, 0.004072253045009639},
    {1.311510557975143, 3.141592653589793, 0.004072253045009639},
    {1.8300820956146504, 0.0, 0.004072253045009639},
    {1.8300820956146504, 3.141592653589793, 0.004072253045009639},
    {0.2592857688197538, 1.5707963267948966, 0.004072253045009639},
    {0.2592857688197538, -1.5707963267948966, 0.004072253045009639},
    {2.8823068847700393, 1.5707963267948966, 0.004072253045009639},
    {2.8823068847700393, -1.5707963267948966, 0.004072253045009639},
    {1.311510557975143, 1.5707963267948966, 0.004072253045009639},
    {1.311510557975143, -1.5707963267948966, 0.004072253045009639},
    {1.8300820956146504, 1.5707963267948966, 0.004072253045009639},
    {1.8300820956146504, -1.5707963267948966, 0.004072253045009639},
    {1.5707963267948966, 1.199380912050133, 0.0045505290556286165},
    {1.5707963267948966, 1.9422117415396603, 0.0045505290556286165},
    {1.5707963267948966, -1.199380912050133, 0.0045505290556286165},
    {1.5707963267948966, -1.9422117415396603, 0.0045505290556286165},
    {1.5707963267948966, 0.37141541474476353, 0.0045505290556286165},
    {1.5707963267948966, 2.77017723884503, 0.0045505290556286165},
    {1.5707963267948966, -0.37141541474476353, 0.0045505290556286165},
    {1.5707963267948966, -2.77017723884503, 0.0045505290556286165},
    {0.37141541474476336, 0.0, 0.0045505290556286165},
    {0.37141541474476336, 3.141592653589793, 0.0045505290556286165},
    {2.77017723884503, 0.0, 0.0045505290556286165},
    {2.77017723884503, 3.141592653589793, 0.0045505290556286165},
    {1.199380912050133, 0.0, 0.0045505290556286165},
    {1.199380912050133, 3.141592653589793, 0.0045505290556286165},
    {1.9422117415396603, 0.0, 0.0045505290556286165},
    {1.9422117415396603, 3.141592653589793, 0.0045505290556286165},
    {0.37141541474476336, 1.5707963267948966, 0.0045505290556286165},
    {0.37141541474476336, -1.5707963267948966, 0.0045505290556286165},
    {2.77017723884503, 1.5707963267948966, 0.0045505290556286165},
    {2.77017723884503, -1.5707963267948966, 0.0045505290556286165},
    {1.199380912050133, 1.5707963267948966, 0.0045505290556286165},
    {1.199380912050133, -1.5707963267948966, 0.0045505290556286165},
    {1.9422117415396603, 1.5707963267948966, 0.0045505290556286165},
    {1.9422117415396603, -1.5707963267948966, 0.0045505290556286165},
    {1.5707963267948966, 1.0833230278402302, 0.004861725631137563},
    {1.5707963267948966, 2.058269625749563, 0.004861725631137563},
    {1.5707963267948966, -1.0833230278402302, 0.004861725631137563},
    {1.5707963267948966, -2.058269625749563, 0.004861725631137563},
    {1.5707963267948966, 0.48747329895466646, 0.004861725631137563},
    {1.5707963267948966, 2.6541193546351267, 0.004861725631137563},
    {1.5707963267948966, -0.48747329895466646, 0.004861725631137563},
    {1.5707963267948966, -2.6541193546351267, 0.004861725631137563},
    {0.4874732989546664, 0.0, 0.004861725631137563},
    {0.4874732989546664, 3.141592653589793, 0.004861725631137563},
    {2.6541193546351267, 0.0, 0.004861725631137563},
    {2.6541193546351267, 3.141592653589793, 0.004861725631137563},
    {1.0833230278402302, 0.0, 0.004861725631137563},
    {1.0833230278402302, 3.141592653589793, 0.004861725631137563},
    {2.058269625749563, 0.0, 0.004861725631137563},
    {2.058269625749563, 3.141592653589793, 0.004861725631137563},
    {0.4874732989546664, 1.5707963267948966, 0.004861725631137563},
    {0.4874732989546664, -1.5707963267948966, 0.004861725631137563},
    {2.6541193546351267, 1.5707963267948966, 0.004861725631137563},
    {2.6541193546351267, -1.5707963267948966, 0.004861725631137563},
    {1.0833230278402302, 1.5707963267948966, 0.004861725631137563},
    {1.0833230278402302, -1.5707963267948966, 0.004861725631137563},
    {2.058269625749563, 1.5707963267948966, 0.004861725631137563},
    {2.058269625749563, -1.5707963267948966, 0.004861725631137563},
    {1.5707963267948966, 0.9649622307641396, 0.00505031317861439},
    {1.5707963267948966, 2.176630422825654, 0.00505031317861439},
    {1.5707963267948966, -0.9649622307641396, 0.00505031317861439},
    {1.5707963267948966, -2.176630422825654, 0.00505031317861439},
    {1.5707963267948966, 0.6058340960307571, 0.00505031317861439},
    {1.5707963267948966, 2.5357585575590362, 0.00505031317861439},
    {1.5707963267948966, -0.6058340960307571, 0.00505031317861439},
    {1.5707963267948966, -2.5357585575590362, 0.00505031317861439},
    {0.6058340960307571, 0.0, 0.00505031317861439},
    {0.6058340960307571, 3.141592653589793, 0.00505031317861439},
    {2.5357585575590362, 0.0, 0.00505031317861439},
    {2.5357585575590362, 3.141592653589793, 0.00505031317861439},
    {0.9649622307641396, 0.0, 0.00505031317861439},
    {0.9649622307641396, 3.141592653589793, 0.00505031317861439},
    {2.176630422825654, 0.0, 0.00505031317861439},
    {2.176630422825654, 3.141592653589793, 0.00505031317861439},
    {0.6058340960307571, 1.5707963267948966, 0.00505031317861439},
    {0.6058340960307571, -1.5707963267948966, 0.00505031317861439},
    {2.5357585575590362, 1.5707963267948966, 0.00505031317861439},
    {2.5357585575590362, -1.5707963267948966, 0.00505031317861439},
    {0.9649622307641396, 1.5707963267948966, 0.00505031317861439},
    {0.9649622307641396, -1.5707963267948966, 0.00505031317861439},
    {2.176630422825654, 1.5707963267948966, 0.00505031317861439},
    {2.176630422825654, -1.5707963267948966, 0.00505031317861439},
    {1.5707963267948966, 0.8453806180644201, 0.005139556904144341},
    {1.5707963267948966, 2.296212035525373, 0.005139556904144341},
    {1.5707963267948966, -0.8453806180644201, 0.005139556904144341},
    {1.5707963267948966, -2.296212035525373, 0.005139556904144341},
    {1.5707963267948966, 0.7254157087304764, 0.005139556904144341},
    {1.5707963267948966, 2.4161769448593167, 0.005139556904144341},
    {1.5707963267948966, -0.7254157087304764, 0.005139556904144341},
    {1.5707963267948966, -2.4161769448593167, 0.005139556904144341},
    {0.7254157087304766, 0.0, 0.005139556904144341},
    {0.7254157087304766, 3.141592653589793, 0.005139556904144341},
    {2.4161769448593167, 0.0, 0.005139556904144341},
    {2.4161769448593167, 3.141592653589793, 0.005139556904144341},
    {0.8453806180644201, 0.0, 0.005139556904144341},
    {0.8453806180644201, 3.141592653589793, 0.005139556904144341},
    {2.296212035525373, 0.0, 0.005139556904144341},
    {2.296212035525373, 3.141592653589793, 0.005139556904144341},
    {0.7254157087304766, 1.5707963267948966, 0.005139556904144341},
    {0.7254157087304766, -1.5707963267948966, 0.005139556904144341},
    {2.4161769448593167, 1.5707963267948966, 0.005139556904144341},
    {2.4161769448593167, -1.5707963267948966, 0.005139556904144341},
    {0.8453806180644201, 1.5707963267948966, 0.005139556904144341},
    {0.8453806180644201, -1.5707963267948966, 0.005139556904144341},
    {2.296212035525373, 1.5707963267948966, 0.005139556904144341},
    {2.296212035525373, -1.5707963267948966, 0.005139556904144341},
    {0.10796653259281545, 0.2854717977444398, 0.0028650162959626088},
    {0.10796653259281545, 2.8561208558453535, 0.0028650162959626088},
    {0.10796653259281545, -0.2854717977444398, 0.0028650162959626088},
    {3.0336261209969777, 0.2854717977444398, 0.0028650162959626088},
    {0.10796653259281545, -2.8561208558453535, 0.0028650162959626088},
    {3.0336261209969777, -0.2854717977444398, 0.0028650162959626088},
    {3.0336261209969777, 2.8561208558453535, 0.0028650162959626088},
    {3.0336261209969777, -2.8561208558453535, 0.0028650162959626088},
    {0.10796653259281545, 1.285324529050457, 0.0028650162959626088},
    {0.10796653259281545, 1.8562681245393364, 0.0028650162959626088},
    {0.10796653259281545, -1.285324529050457, 0.0028650162959626088},
    {3.0336261209969777, 1.285324529050457, 0.0028650162959626088},
    {0.10796653259281545, -1.8562681245393364, 0.0028650162959626088},
    {3.0336261209969777, -1.285324529050457, 0.0028650162959626088},
    {3.0336261209969777, 1.8562681245393364, 0.0028650162959626088},
    {3.0336261209969777, -1.8562681245393364, 0.0028650162959626088},
    {1.5404462275284867, 0.1036288739469756, 0.0028650162959626088},
    {1.5404462275284867, 3.037963779642818, 0.0028650162959626088},
    {1.5404462275284867, -0.1036288739469756, 0.0028650162959626088},
    {1.6011464260613066, 0.1036288739469756, 0.0028650162959626088},
    {1.5404462275284867, -3.037963779642818, 0.0028650162959626088},
    {1.6011464260613066, -0.1036288739469756, 0.0028650162959626088},
    {1.6011464260613066, 3.037963779642818, 0.0028650162959626088},
    {1.6011464260613066, -3.037963779642818, 0.0028650162959626088},
    {1.4672153483935595, 0.030513694338789102, 0.0028650162959626088},
    {1.4672153483935595, 3.111078959251004, 0.0028650162959626088},
    {1.4672153483935595, -0.030513694338789102, 0.0028650162959626088},
    {1.6743773051962338, 0.030513694338789102, 0.0028650162959626088},
    {1.4672153483935595, -3.111078959251004, 0.0028650162959626088},
    {1.6743773051962338, -0.030513694338789102, 0.0028650162959626088},
    {1.6743773051962338, 3.111078959251004, 0.0028650162959626088},
    {1.6743773051962338, -3.111078959251004, 0.0028650162959626088},
    {1.5404462275284867, 1.467167452847921, 0.0028650162959626088},
    {1.5404462275284867, 1.6744252007418723, 0.0028650162959626088},
    {1.5404462275284867, -1.467167452847921, 0.0028650162959626088},
    {1.6011464260613066, 1.467167452847921, 0.0028650162959626088},
    {1.5404462275284867, -1.6744252007418723, 0.0028650162959626088},
    {1.6011464260613066, -1.467167452847921, 0.0028650162959626088},
    {1.6011464260613066, 1.6744252007418723, 0.0028650162959626088},
    {1.6011464260613066, -1.6744252007418723, 0.0028650162959626088},
    {1.4672153483935595, 1.5402826324561074, 0.0028650162959626088},
    {1.4672153483935595, 1.6013100211336857, 0.0028650162959626088},
    {1.4672153483935595, -1.5402826324561074, 0.0028650162959626088},
    {1.6743773051962338, 1.5402826324561074, 0.0028650162959626088},
    {1.4672153483935595, -1.6013100211336857, 0.0028650162959626088},
    {1.6743773051962338, -1.5402826324561074, 0.0028650162959626088},
    {1.6743773051962338, 1.6013100211336857, 0.0028650162959626088},
    {1.6743773051962338, -1.6013100211336857, 0.0028650162959626088},
    {0.16224573464984987, 0.42217403845146984, 0.003412027848875733},
    {0.16224573464984987, 2.7194186151383235, 0.003412027848875733},
    {0.16224573464984987, -0.42217403845146984, 0.003412027848875733},
    {2.9793469189399433, 0.42217403845146984, 0.003412027848875733},
    {0.16224573464984987, -2.7194186151383235, 0.003412027848875733},
    {2.9793469189399433, -0.42217403845146984, 0.003412027848875733},
    {2.9793469189399433, 2.7194186151383235, 0.003412027848875733},
    {2.9793469189399433, -2.7194186151383235, 0.003412027848875733},
    {0.16224573464984987, 1.1486222883434267, 0.003412027848875733},
    {0.16224573464984987, 1.9929703652463664, 0.003412027848875733},
    {0.16224573464984987, -1.1486222883434267, 0.003412027848875733},
    {2.9793469189399433, 1.1486222883434267, 0.003412027848875733},
    {0.16224573464984987, -1.9929703652463664, 0.003412027848875733},
    {2.9793469189399433, -1.1486222883434267, 0.003412027848875733},
    {2.9793469189399433, 1.9929703652463664, 0.003412027848875733},
    {2.9793469189399433, -1.9929703652463664, 0.003412027848875733},
    {1.5045598741345845, 0.14821806445887772, 0.003412027848875733},
    {1.5045598741345845, 2.9933745891309154, 0.003412027848875733},
    {1.5045598741345845, -0.14821806445887772, 0.003412027848875733},
    {1.6370327794552086, 0.14821806445887772, 0.003412027848875733},
    {1.5045598741345845, -2.9933745891309154, 0.003412027848875733},
    {1.6370327794552086, -0.14821806445887772, 0.003412027848875733},
    {1.6370327794552086, 2.9933745891309154, 0.003412027848875733},
    {1.6370327794552086, -2.9933745891309154, 0.003412027848875733},
    {1.422905672805196, 0.06696855191073996, 0.003412027848875733},
    {1.422905672805196, 3.074624101679053, 0.003412027848875733},
    {1.422905672805196, -0.06696855191073996, 0.003412027848875733},
    {1.7186869807845973, 0.06696855191073996, 0.003412027848875733},
    {1.422905672805196, -3.074624101679053, 0.003412027848875733},
    {1.7186869807845973, -0.06696855191073996, 0.003412027848875733},
    {1.7186869807845973, 3.074624101679053, 0.003412027848875733},
    {1.7186869807845973, -3.074624101679053, 0.003412027848875733},
    {1.5045598741345845, 1.4225782623360188, 0.003412027848875733},
    {1.5045598741345845, 1.7190143912537743, 0.003412027848875733},
    {1.5045598741345845, -1.4225782623360188, 0.003412027848875733},
    {1.6370327794552086, 1.4225782623360188, 0.003412027848875733},
    {1.5045598741345845, -1.7190143912537743, 0.003412027848875733},
    {1.6370327794552086, -1.4225782623360188, 0.003412027848875733},
    {1.6370327794552086, 1.7190143912537743, 0.003412027848875733},
    {1.6370327794552086, -1.7190143912537743, 0.003412027848875733},
    {1.422905672805196, 1.5038277748841566, 0.003412027848875733},
    {1.422905672805196, 1.6377648787056365, 0.003412027848875733},
    {1.422905672805196, -1.5038277748841566, 0.003412027848875733},
    {1.7186869807845973, 1.5038277748841566, 0.003412027848875733},
    {1.422905672805196, -1.6377648787056365, 0.003412027848875733},
    {1.7186869807845973, -1.5038277748841566, 0.003412027848875733},
    {1.7186869807845973, 1.6377648787056365, 0.003412027848875733},
    {1.7186869807845973, -1.6377648787056365, 0.003412027848875733},
    {0.22124825859500188, 0.5012171090538796, 0.0038426929598263855},
    {0.22124825859500188, 2.640375544535914, 0.0038426929598263855},
    {0.22124825859500188, -0.5012171090538796, 0.0038426929598263855},
    {2.920344394994791, 0.5012171090538796, 0.0038426929598263855},
    {0.22124825859500188, -2.640375544535914, 0.0038426929598263855},
    {2.920344394994791, -0.5012171090538796, 0.0038426929598263855},
    {2.920344394994791, 2.640375544535914, 0.0038426929598263855},
    {2.920344394994791, -2.640375544535914, 0.0038426929598263855},
    {0.22124825859500188, 1.069579217741017, 0.0038426929598263855},
    {0.22124825859500188, 2.0720134358487763, 0.0038426929598263855},
    {0.22124825859500188, -1.069579217741017, 0.0038426929598263855},
    {2.920344394994791, 1.069579217741017, 0.0038426929598263855},
    {0.22124825859500188, -2.0720134358487763, 0.0038426929598263855},
    {2.920344394994791, -1.069579217741017, 0.0038426929598263855},
    {2.920344394994791, 2.0720134358487763, 0.0038426929598263855},
    {2.920344394994791, -2.0720134358487763, 0.0038426929598263855},
    {1.4651568393143464, 0.1947630837237532, 0.0038426929598263855},
    {1.4651568393143464, 2.94682956986604, 0.0038426929598263855},
    {1.4651568393143464, -0.1947630837237532, 0.0038426929598263855},
    {1.6764358142754467, 0.1947630837237532, 0.0038426929598263855},
    {1.4651568393143464, -2.94682956986604, 0.0038426929598263855},
    {1.6764358142754467, -0.1947630837237532, 0.0038426929598263855},
    {1.6764358142754467, 2.94682956986604, 0.0038426929598263855},
    {1.6764358142754467, -2.94682956986604, 0.0038426929598263855},
    {1.3771328025576226, 0.10765969681727776, 0.0038426929598263855},
    {1.3771328025576226, 3.0339329567725155, 0.0038426929598263855},
    {1.3771328025576226, -0.10765969681727776, 0.0038426929598263855},
    {1.7644598510321705, 0.10765969681727776, 0.0038426929598263855},
    {1.3771328025576226, -3.0339329567725155, 0.0038426929598263855},
    {1.7644598510321705, -0.10765969681727776, 0.0038426929598263855},
    {1.7644598510321705, 3.0339329567725155, 0.0038426929598263855},
    {1.7644598510321705, -3.0339329567725155, 0.0038426929598263855},
    {1.4651568393143464, 1.3760332430711435, 0.0038426929598263855},
    {1.4651568393143464, 1.7655594105186498, 0.0038426929598263855},
    {1.4651568393143464, -1.3760332430711435, 0.0038426929598263855},
    {1.6764358142754467, 1.3760332430711435, 0.0038426929598263855},
    {1.4651568393143464, -1.7655594105186498, 0.0038426929598263855},
    {1.6764358142754467, -1.3760332430711435, 0.0038426929598263855},
    {1.6764358142754467, 1.7655594105186498, 0.0038426929598263855},
    {1.6764358142754467, -1.7655594105186498, 0.0038426929598263855},
    {1.3771328025576226, 1.463136629977619, 0.0038426929598263855},
    {1.3771328025576226, 1.6784560236121744, 0.0038426929598263855},
    {1.3771328025576226, -1.463136629977619, 0.0038426929598263855},
    {1.7644598510321705, 1.463136629977619, 0.0038426929598263855},
    {1.3771328025576226, -1.6784560236121744, 0.0038426929598263855},
    {1.7644598510321705, -1.463136629977619, 0.0038426929598263855},
    {1.7644598510321705, 1.6784560236121744, 0.0038426929598263855},
    {1.7644598510321705, -1.6784560236121744, 0.0038426929598263855},
    {0.28352256908394236, 0.5525606253600257, 0.004180722241886776},
    {0.28352256908394236, 2.5890320282297674, 0.004180722241886776},
    {0.28352256908394236, -0.5525606253600257, 0.004180722241886776},
    {2.858070084505851, 0.5525606253600257, 0.004180722241886776},
    {0.28352256908394236, -2.5890320282297674, 0.004180722241886776},
    {2.858070084505851, -0.5525606253600257, 0.004180722241886776},
    {2.858070084505851, 2.5890320282297674, 0.004180722241886776},
    {2.858070084505851, -2.5890320282297674, 0.004180722241886776},
    {0.28352256908394236, 1.0182357014348709, 0.004180722241886776},
    {0.28352256908394236, 2.1233569521549223, 0.004180722241886776},
    {0.28352256908394236, -1.0182357014348709, 0.004180722241886776},
    {2.858070084505851, 1.0182357014348709, 0.004180722241886776},
    {0.28352256908394236, -2.1233569521549223, 0.004180722241886776},
    {2.858070084505851, -1.0182357014348709, 0.004180722241886776},
    {2.858070084505851, 2.1233569521549223, 0.004180722241886776},
    {2.858070084505851, -2.1233569521549223, 0.004180722241886776},
    {1.4234372406737676, 0.24310581676016527, 0.004180722241886776},
    {1.4234372406737676, 2.898486836829628, 0.004180722241886776},
    {1.4234372406737676, -0.24310581676016527, 0.004180722241886776},
    {1.7181554129160257, 0.24310581676016527, 0.004180722241886776},
    {1.4234372406737676, -2.898486836829628, 0.004180722241886776},
    {1.7181554129160257, -0.24310581676016527, 0.004180722241886776},
    {1.7181554129160257, 2.898486836829628, 0.004180722241886776},
    {1.7181554129160257, -2.898486836829628, 0.004180722241886776},
    {1.3303774914012545, 0.15175620174333002, 0.004180722241886776},
    {1.3303774914012545, 2.9898364518464633, 0.004180722241886776},
    {1.3303774914012545, -0.15175620174333002, 0.004180722241886776},
    {1.8112151621885388, 0.15175620174333002, 0.004180722241886776},
    {1.3303774914012545, -2.9898364518464633, 0.004180722241886776},
    {1.8112151621885388, -0.15175620174333002, 0.004180722241886776},
    {1.8112151621885388, 2.9898364518464633, 0.004180722241886776},
    {1.8112151621885388, -2.9898364518464633, 0.004180722241886776},
    {1.4234372406737676, 1.3276905100347314, 0.004180722241886776},
    {1.4234372406737676, 1.813902143555062, 0.004180722241886776},
    {1.4234372406737676, -1.3276905100347314, 0.004180722241886776},
    {1.7181554129160257, 1.3276905100347314, 0.004180722241886776},
    {1.4234372406737676, -1.813902143555062, 0.004180722241886776},
    {1.7181554129160257, -1.3276905100347314, 0.004180722241886776},
    {1.7181554129160257, 1.813902143555062, 0.004180722241886776},
    {1.7181554129160257, -1.813902143555062, 0.004180722241886776},
    {1.3303774914012545, 1.4190401250515665, 0.004180722241886776},
    {1.3303774914012545, 1.7225525285382266, 0.004180722241886776},
    {1.3303774914012545, -1.4190401250515665, 0.004180722241886776},
    {1.8112151621885388, 1.4190401250515665, 0.004180722241886776},
    {1.3303774914012545, -1.7225525285382266, 0.004180722241886776},
    {1.8112151621885388, -1.4190401250515665, 0.004180722241886776},
    {1.8112151621885388, 1.7225525285382266, 0.004180722241886776},
    {1.8112151621885388, -1.7225525285382266, 0.004180722241886776},
    {0.3482285733974469, 0.5885890223105105, 0.004445145897664763},
    {0.3482285733974469, 2.5530036312792825, 0.004445145897664763},
    {0.3482285733974469, -0.5885890223105105, 0.004445145897664763},
    {2.7933640801923465, 0.5885890223105105, 0.004445145897664763},
    {0.3482285733974469, -2.5530036312792825, 0.004445145897664763},
    {2.7933640801923465, -0.5885890223105105, 0.004445145897664763},
    {2.7933640801923465, 2.5530036312792825, 0.004445145897664763},
    {2.7933640801923465, -2.5530036312792825, 0.004445145897664763},
    {0.3482285733974469, 0.9822073044843862, 0.004445145897664763},
    {0.3482285733974469, 2.159385349105407, 0.004445145897664763},
    {0.3482285733974469, -0.9822073044843862, 0.004445145897664763},
    {2.7933640801923465, 0.9822073044843862, 0.004445145897664763},
    {0.3482285733974469, -2.159385349105407, 0.004445145897664763},
    {2.7933640801923465, -0.9822073044843862, 0.004445145897664763},
    {2.7933640801923465, 2.159385349105407, 0.004445145897664763},
    {2.7933640801923465, -2.159385349105407, 0.004445145897664763},
    {1.380195769369131, 0.2932307991784922, 0.004445145897664763},
    {1.380195769369131, 2.848361854411301, 0.004445145897664763},
    {1.380195769369131, -0.2932307991784922, 0.004445145897664763},
    {1.7613968842206624, 0.2932307991784922, 0.004445145897664763},
    {1.380195769369131, -2.848361854411301, 0.004445145897664763},
    {1.7613968842206624, -0.2932307991784922, 0.004445145897664763},
    {1.7613968842206624, 2.848361854411301, 0.004445145897664763},
    {1.7613968842206624, -2.848361854411301, 0.004445145897664763},
    {1.2830288935763932, 0.19888132049594218, 0.004445145897664763},
    {1.2830288935763932, 2.9427113330938512, 0.004445145897664763},
    {1.2830288935763932, -0.19888132049594218, 0.004445145897664763},
    {1.8585637600134, 0.19888132049594218, 0.004445145897664763},
    {1.2830288935763932, -2.9427113330938512, 0.004445145897664763},
    {1.8585637600134, -0.19888132049594218, 0.004445145897664763},
    {1.8585637600134, 2.9427113330938512, 0.004445145897664763},
    {1.8585637600134, -2.9427113330938512, 0.004445145897664763},
    {1.380195769369131, 1.2775655276164044, 0.004445145897664763},
    {1.380195769369131, 1.8640271259733887, 0.004445145897664763},
    {1.380195769369131, -1.2775655276164044, 0.004445145897664763},
    {1.7613968842206624, 1.2775655276164044, 0.004445145897664763},
    {1.380195769369131, -1.8640271259733887, 0.004445145897664763},
    {1.7613968842206624, -1.2775655276164044, 0.004445145897664763},
    {1.7613968842206624, 1.8640271259733887, 0.004445145897664763},
    {1.7613968842206624, -1.8640271259733887, 0.004445145897664763},
    {1.2830288935763932, 1.3719150062989545, 0.004445145897664763},
    {1.2830288935763932, 1.7696776472908389, 0.004445145897664763},
    {1.2830288935763932, -1.3719150062989545, 0.004445145897664763},
    {1.8585637600134, 1.3719150062989545, 0.004445145897664763},
    {1.2830288935763932, -1.7696776472908389, 0.004445145897664763},
    {1.8585637600134, -1.3719150062989545, 0.004445145897664763},
    {1.8585637600134, 1.7696776472908389, 0.004445145897664763},
    {1.8585637600134, -1.7696776472908389, 0.004445145897664763},
    {0.41484566942909806, 0.6152887428764441, 0.004650270269829368},
    {0.41484566942909806, 2.526303910713349, 0.004650270269829368},
    {0.41484566942909806, -0.6152887428764441, 0.004650270269829368},
    {2.726746984160695, 0.6152887428764441, 0.004650270269829368},
    {0.41484566942909806, -2.526303910713349, 0.004650270269829368},
    {2.726746984160695, -0.6152887428764441, 0.004650270269829368},
    {2.726746984160695, 2.526303910713349, 0.004650270269829368},
    {2.726746984160695, -2.526303910713349, 0.004650270269829368},
    {0.41484566942909806, 0.9555075839184526, 0.004650270269829368},
    {0.41484566942909806, 2.1860850696713405, 0.004650270269829368},
    {0.41484566942909806, -0.9555075839184526, 0.004650270269829368},
    {2.726746984160695, 0.9555075839184526, 0.004650270269829368},
    {0.41484566942909806, -2.1860850696713405, 0.004650270269829368},
    {2.726746984160695, -0.9555075839184526, 0.004650270269829368},
    {2.726746984160695, 2.1860850696713405, 0.004650270269829368},
    {2.726746984160695, -2.1860850696713405, 0.004650270269829368},
    {1.3360076927643803, 0.3452344334375916, 0.004650270269829368},
    {1.3360076927643803, 2.796358220152202, 0.004650270269829368},
    {1.3360076927643803, -0.3452344334375916, 0.004650270269829368},
    {1.8055849608254129, 0.3452344334375916, 0.004650270269829368},
    {1.3360076927643803, -2.796358220152202, 0.004650270269829368},
    {1.8055849608254129, -0.3452344334375916, 0.004650270269829368},
    {1.8055849608254129, 2.796358220152202, 0.004650270269829368},
    {1.8055849608254129, -2.796358220152202, 0.004650270269829368},
    {1.2354117823051056, 0.24892669640216175, 0.004650270269829368},
    {1.2354117823051056, 2.8926659571876314, 0.004650270269829368},
    {1.2354117823051056, -0.24892669640216175, 0.004650270269829368},
    {1.9061808712846877, 0.24892669640216175, 0.004650270269829368},
    {1.2354117823051056, -2.8926659571876314, 0.004650270269829368},
    {1.9061808712846877, -0.24892669640216175, 0.004650270269829368},
    {1.9061808712846877, 2.8926659571876314, 0.004650270269829368},
    {1.9061808712846877, -2.8926659571876314, 0.004650270269829368},
    {1.3360076927643803, 1.2255618933573051, 0.004650270269829368},
    {1.3360076927643803, 1.9160307602324882, 0.004650270269829368},
    {1.3360076927643803, -1.2255618933573051, 0.004650270269829368},
    {1.8055849608254129, 1.2255618933573051, 0.004650270269829368},
    {1.3360076927643803, -1.9160307602324882, 0.004650270269829368},
    {1.8055849608254129, -1.2255618933573051, 0.004650270269829368},
    {1.8055849608254129, 1.9160307602324882, 0.004650270269829368},
    {1.8055849608254129, -1.9160307602324882, 0.004650270269829368},
    {1.2354117823051056, 1.3218696303927349, 0.004650270269829368},
    {1.2354117823051056, 1.8197230231970583, 0.004650270269829368},
    {1.2354117823051056, -1.3218696303927349, 0.004650270269829368},
    {1.9061808712846877, 1.3218696303927349, 0.004650270269829368},
    {1.2354117823051056, -1.8197230231970583, 0.004650270269829368},
    {1.9061808712846877, -1.3218696303927349, 0.004650270269829368},
    {1.9061808712846877, 1.8197230231970583, 0.004650270269829368},
    {1.9061808712846877, -1.8197230231970583, 0.004650270269829368},
    {0.48304096714969974, 0.6358903804378694, 0.004806945104281734},
    {0.48304096714969974, 2.5057022731519236, 0.004806945104281734},
    {0.48304096714969974, -0.6358903804378694, 0.004806945104281734},
    {2.6585516864400933, 0.6358903804378694, 0.004806945104281734},
    {0.48304096714969974, -2.5057022731519236, 0.004806945104281734},
    {2.6585516864400933, -0.6358903804378694, 0.004806945104281734},
    {2.6585516864400933, 2.5057022731519236, 0.004806945104281734},
    {2.6585516864400933, -2.5057022731519236, 0.004806945104281734},
    {0.48304096714969974, 0.9349059463570273, 0.004806945104281734},
    {0.48304096714969974, 2.206686707232766, 0.004806945104281734},
    {0.48304096714969974, -0.9349059463570273, 0.004806945104281734},
    {2.6585516864400933, 0.9349059463570273, 0.004806945104281734},
    {0.48304096714969974, -2.206686707232766, 0.004806945104281734},
    {2.6585516864400933, -0.9349059463570273, 0.004806945104281734},
    {2.6585516864400933, 2.206686707232766, 0.004806945104281734},
    {2.6585516864400933, -2.206686707232766, 0.004806945104281734},
    {1.2913239022697343, 0.39930019959313645, 0.004806945104281734},
    {1.2913239022697343, 2.7422924539966567, 0.004806945104281734},
    {1.2913239022697343, -0.39930019959313645, 0.004806945104281734},
    {1.850268751320059, 0.39930019959313645, 0.004806945104281734},
    {1.2913239022697343, -2.7422924539966567, 0.004806945104281734},
    {1.850268751320059, -0.39930019959313645, 0.004806945104281734},
    {1.850268751320059, 2.7422924539966567, 0.004806945104281734},
    {1.850268751320059, -2.7422924539966567, 0.004806945104281734},
    {1.1878125977384832, 0.301961600779255, 0.004806945104281734},
    {1.1878125977384832, 2.8396310528105384, 0.004806945104281734},
    {1.1878125977384832, -0.301961600779255, 0.004806945104281734},
    {1.9537800558513099, 0.301961600779255, 0.004806945104281734},
    {1.1878125977384832, -2.8396310528105384, 0.004806945104281734},
    {1.9537800558513099, -0.301961600779255, 0.004806945104281734},
    {1.9537800558513099, 2.8396310528105384, 0.004806945104281734},
    {1.9537800558513099, -2.8396310528105384, 0.004806945104281734},
    {1.2913239022697343, 1.17149612720176, 0.004806945104281734},
    {1.2913239022697343, 1.970096526388033, 0.004806945104281734},
    {1.2913239022697343, -1.17149612720176, 0.004806945104281734},
    {1.850268751320059, 1.17149612720176, 0.004806945104281734},
    {1.2913239022697343, -1.970096526388033, 0.004806945104281734},
    {1.850268751320059, -1.17149612720176, 0.004806945104281734},
    {1.850268751320059, 1.970096526388033, 0.004806945104281734},
    {1.850268751320059, -1.970096526388033, 0.004806945104281734},
    {1.1878125977384832, 1.2688347260156416, 0.004806945104281734},
    {1.1878125977384832, 1.8727579275741517, 0.004806945104281734},
    {1.1878125977384832, -1.2688347260156416, 0.004806945104281734},
    {1.9537800558513099, 1.2688347260156416, 0.004806945104281734},
    {1.1878125977384832, -1.8727579275741517, 0.004806945104281734},
    {1.9537800558513099, -1.2688347260156416, 0.004806945104281734},
    {1.9537800558513099, 1.8727579275741517, 0.004806945104281734},
    {1.9537800558513099, -1.8727579275741517, 0.004806945104281734},
    {0.5526017196949751, 0.6522837583504256, 0.004923661301874851},
    {0.5526017196949751, 2.4893088952393674, 0.004923661301874851},
    {0.5526017196949751, -0.6522837583504256, 0.004923661301874851},
    {2.5889909338948183, 0.6522837583504256, 0.004923661301874851},
    {0.5526017196949751, -2.4893088952393674, 0.004923661301874851},
    {2.5889909338948183, -0.6522837583504256, 0.004923661301874851},
    {2.5889909338948183, 2.4893088952393674, 0.004923661301874851},
    {2.5889909338948183, -2.4893088952393674, 0.004923661301874851},
    {0.5526017196949751, 0.918512568444471, 0.004923661301874851},
    {0.5526017196949751, 2.2230800851453223, 0.004923661301874851},
    {0.5526017196949751, -0.918512568444471, 0.004923661301874851},
    {2.5889909338948183, 0.918512568444471, 0.004923661301874851},
    {0.5526017196949751, -2.2230800851453223, 0.004923661301874851},
    {2.5889909338948183, -0.918512568444471, 0.004923661301874851},
    {2.5889909338948183, 2.2230800851453223, 0.004923661301874851},
    {2.5889909338948183, -2.2230800851453223, 0.004923661301874851},
    {1.2465252534652487, 0.4556832431750451, 0.004923661301874851},
    {1.2465252534652487, 2.685909410414748, 0.004923661301874851},
    {1.2465252534652487, -0.4556832431750451, 0.004923661301874851},
    {1.8950674001245444, 0.4556832431750451, 0.004923661301874851},
    {1.2465252534652487, -2.685909410414748, 0.004923661301874851},
    {1.8950674001245444, -0.4556832431750451, 0.004923661301874851},
    {1.8950674001245444, 2.685909410414748, 0.004923661301874851},
    {1.8950674001245444, -2.685909410414748, 0.004923661301874851},
    {1.1404994839080436, 0.3581857758469002, 0.004923661301874851},
    {1.1404994839080436, 2.783406877742893, 0.004923661301874851},
    {1.1404994839080436, -0.3581857758469002, 0.004923661301874851},
    {2.0010931696817496, 0.3581857758469002, 0.004923661301874851},
    {1.1404994839080436, -2.783406877742893, 0.004923661301874851},
    {2.0010931696817496, -0.3581857758469002, 0.004923661301874851},
    {2.0010931696817496, 2.783406877742893, 0.004923661301874851},
    {2.0010931696817496, -2.783406877742893, 0.004923661301874851},
    {1.2465252534652487, 1.1151130836198515, 0.004923661301874851},
    {1.2465252534652487, 2.0264795699699416, 0.004923661301874851},
    {1.2465252534652487, -1.1151130836198515, 0.004923661301874851},
    {1.8950674001245444, 1.1151130836198515, 0.004923661301874851},
    {1.2465252534652487, -2.0264795699699416, 0.004923661301874851},
    {1.8950674001245444, -1.1151130836198515, 0.004923661301874851},
    {1.8950674001245444, 2.0264795699699416, 0.004923661301874851},
    {1.8950674001245444, -2.0264795699699416, 0.004923661301874851},
    {1.1404994839080436, 1.2126105509479963, 0.004923661301874851},
    {1.1404994839080436, 1.9289821026417968, 0.004923661301874851},
    {1.1404994839080436, -1.2126105509479963, 0.004923661301874851},
    {2.0010931696817496, 1.2126105509479963, 0.004923661301874851},
    {1.1404994839080436, -1.9289821026417968, 0.004923661301874851},
    {2.0010931696817496, -1.2126105509479963, 0.004923661301874851},
    {2.0010931696817496, 1.9289821026417968, 0.004923661301874851},
    {2.0010931696817496, -1.9289821026417968, 0.004923661301874851},
    {0.623397725009008, 0.6656436649497345, 0.005007347359154053},
    {0.623397725009008, 2.4759489886400585, 0.005007347359154053},
    {0.623397725009008, -0.6656436649497345, 0.005007347359154053},
    {2.518194928580785, 0.6656436649497345, 0.005007347359154053},
    {0.623397725009008, -2.4759489886400585, 0.005007347359154053},
    {2.518194928580785, -0.6656436649497345, 0.005007347359154053},
    {2.518194928580785, 2.4759489886400585, 0.005007347359154053},
    {2.518194928580785, -2.4759489886400585, 0.005007347359154053},
    {0.623397725009008, 0.9051526618451622, 0.005007347359154053},
    {0.623397725009008, 2.236439991744631, 0.005007347359154053},
    {0.623397725009008, -0.9051526618451622, 0.005007347359154053},
    {2.518194928580785, 0.9051526618451622, 0.005007347359154053},
    {0.623397725009008, -2.236439991744631, 0.005007347359154053},
    {2.518194928580785, -0.9051526618451622, 0.005007347359154053},
    {2.518194928580785, 2.236439991744631, 0.005007347359154053},
    {2.518194928580785, -2.236439991744631, 0.005007347359154053},
    {1.201957087517685, 0.5147014877598924, 0.005007347359154053},
    {1.201957087517685, 2.6268911658299006, 0.005007347359154053},
    {1.201957087517685, -0.5147014877598924, 0.005007347359154053},
    {1.939635566072108, 0.5147014877598924, 0.005007347359154053},
    {1.201957087517685, -2.6268911658299006, 0.005007347359154053},
    {1.939635566072108, -0.5147014877598924, 0.005007347359154053},
    {1.939635566072108, 2.6268911658299006, 0.005007347359154053},
    {1.939635566072108, -2.6268911658299006, 0.005007347359154053},
    {1.0937381503839503, 0.4179041364591989, 0.005007347359154053},
    {1.0937381503839503, 2.7236885171305945, 0.005007347359154053},
    {1.0937381503839503, -0.4179041364591989, 0.005007347359154053},
    {2.0478545032058433, 0.4179041364591989, 0.005007347359154053},
    {1.0937381503839503, -2.7236885171305945, 0.005007347359154053},
    {2.0478545032058433, -0.4179041364591989, 0.005007347359154053},
    {2.0478545032058433, 2.7236885171305945, 0.005007347359154053},
    {2.0478545032058433, -2.7236885171305945, 0.005007347359154053},
    {1.201957087517685, 1.0560948390350042, 0.005007347359154053},
    {1.201957087517685, 2.085497814554789, 0.005007347359154053},
    {1.201957087517685, -1.0560948390350042, 0.005007347359154053},
    {1.939635566072108, 1.0560948390350042, 0.005007347359154053},
    {1.201957087517685, -2.085497814554789, 0.005007347359154053},
    {1.939635566072108, -1.0560948390350042, 0.005007347359154053},
    {1.939635566072108, 2.085497814554789, 0.005007347359154053},
    {1.939635566072108, -2.085497814554789, 0.005007347359154053},
    {1.0937381503839503, 1.1528921903356977, 0.005007347359154053},
    {1.0937381503839503, 1.9887004632540954, 0.005007347359154053},
    {1.0937381503839503, -1.1528921903356977, 0.005007347359154053},
    {2.0478545032058433, 1.1528921903356977, 0.005007347359154053},
    {1.0937381503839503, -1.9887004632540954, 0.005007347359154053},
    {2.0478545032058433, -1.1528921903356977, 0.005007347359154053},
    {2.0478545032058433, 1.9887004632540954, 0.005007347359154053},
    {2.0478545032058433, -1.9887004632540954, 0.005007347359154053},
    {0.6953592372784546, 0.6767350019433517, 0.005063928175968061},
    {0.6953592372784546, 2.4648576516464415, 0.005063928175968061},
    {0.6953592372784546, -0.6767350019433517, 0.005063928175968061},
    {2.4462334163113386, 0.6767350019433517, 0.005063928175968061},
    {0.6953592372784546, -2.4648576516464415, 0.005063928175968061},
    {2.4462334163113386, -0.6767350019433517, 0.005063928175968061},
    {2.4462334163113386, 2.4648576516464415, 0.005063928175968061},
    {2.4462334163113386, -2.4648576516464415, 0.005063928175968061},
    {0.6953592372784546, 0.8940613248515449, 0.005063928175968061},
    {0.6953592372784546, 2.2475313287382486, 0.005063928175968061},
    {0.6953592372784546, -0.8940613248515449, 0.005063928175968061},
    {2.4462334163113386, 0.8940613248515449, 0.005063928175968061},
    {0.6953592372784546, -2.2475313287382486, 0.005063928175968061},
    {2.4462334163113386, -0.8940613248515449, 0.005063928175968061},
    {2.4462334163113386, 2.2475313287382486, 0.005063928175968061},
    {2.4462334163113386, -2.2475313287382486, 0.005063928175968061},
    {1.1579537227669734, 0.5767304137740791, 0.005063928175968061},
    {1.1579537227669734, 2.564862239815714, 0.005063928175968061},
    {1.1579537227669734, -0.5767304137740791, 0.005063928175968061},
    {1.9836389308228197, 0.5767304137740791, 0.005063928175968061},
    {1.1579537227669734, -2.564862239815714, 0.005063928175968061},
    {1.9836389308228197, -0.5767304137740791, 0.005063928175968061},
    {1.9836389308228197, 2.564862239815714, 0.005063928175968061},
    {1.9836389308228197, -2.564862239815714, 0.005063928175968061},
    {1.047805529263944, 0.4815126754747372, 0.005063928175968061},
    {1.047805529263944, 2.660079978115056, 0.005063928175968061},
    {1.047805529263944, -0.4815126754747372, 0.005063928175968061},
    {2.093787124325849, 0.4815126754747372, 0.005063928175968061},
    {1.047805529263944, -2.660079978115056, 0.005063928175968061},
    {2.093787124325849, -0.4815126754747372, 0.005063928175968061},
    {2.093787124325849, 2.660079978115056, 0.005063928175968061},
    {2.093787124325849, -2.660079978115056, 0.005063928175968061},
    {1.1579537227669734, 0.9940659130208176, 0.005063928175968061},
    {1.1579537227669734, 2.1475267405689755, 0.005063928175968061},
    {1.1579537227669734, -0.9940659130208176, 0.005063928175968061},
    {1.9836389308228197, 0.9940659130208176, 0.005063928175968061},
    {1.1579537227669734, -2.1475267405689755, 0.005063928175968061},
    {1.9836389308228197, -0.9940659130208176, 0.005063928175968061},
    {1.9836389308228197, 2.1475267405689755, 0.005063928175968061},
    {1.9836389308228197, -2.1475267405689755, 0.005063928175968061},
    {1.047805529263944, 1.0892836513201594, 0.005063928175968061},
    {1.047805529263944, 2.0523090022696335, 0.005063928175968061},
    {1.047805529263944, -1.0892836513201594, 0.005063928175968061},
    {2.093787124325849, 1.0892836513201594, 0.005063928175968061},
    {1.047805529263944, -2.0523090022696335, 0.005063928175968061},
    {2.093787124325849, -1.0892836513201594, 0.005063928175968061},
    {2.093787124325849, 2.0523090022696335, 0.005063928175968061},
    {2.093787124325849, -2.0523090022696335, 0.005063928175968061},
    {0.7684634175007046, 0.6860733350229861, 0.005098715193299257},
    {0.7684634175007046, 2.4555193185668074, 0.005098715193299257},
    {0.7684634175007046, -0.6860733350229861, 0.005098715193299257},
    {2.3731292360890888, 0.6860733350229861, 0.005098715193299257},
    {0.7684634175007046, -2.4555193185668074, 0.005098715193299257},
    {2.3731292360890888, -0.6860733350229861, 0.005098715193299257},
    {2.3731292360890888, 2.4555193185668074, 0.005098715193299257},
    {2.3731292360890888, -2.4555193185668074, 0.005098715193299257},
    {0.7684634175007046, 0.8847229917719105, 0.005098715193299257},
    {0.7684634175007046, 2.2568696618178827, 0.005098715193299257},
    {0.7684634175007046, -0.8847229917719105, 0.005098715193299257},
    {2.3731292360890888, 0.8847229917719105, 0.005098715193299257},
    {0.7684634175007046, -2.2568696618178827, 0.005098715193299257},
    {2.3731292360890888, -0.8847229917719105, 0.005098715193299257},
    {2.3731292360890888, 2.2568696618178827, 0.005098715193299257},
    {2.3731292360890888, -2.2568696618178827, 0.005098715193299257},
    {1.1148579777833196, 0.6421989417385616, 0.005098715193299257},
    {1.1148579777833196, 2.4993937118512317, 0.005098715193299257},
    {1.1148579777833196, -0.6421989417385616, 0.005098715193299257},
    {2.0267346758064737, 0.6421989417385616, 0.005098715193299257},
    {1.1148579777833196, -2.4993937118512317, 0.005098715193299257},
    {2.0267346758064737, -0.6421989417385616, 0.005098715193299257},
    {2.0267346758064737, 2.4993937118512317, 0.005098715193299257},
    {2.0267346758064737, -2.4993937118512317, 0.005098715193299257},
    {1.0030027070661933, 0.5494892761977238, 0.005098715193299257},
    {1.0030027070661933, 2.5921033773920694, 0.005098715193299257},
    {1.0030027070661933, -0.5494892761977238, 0.005098715193299257},
    {2.1385899465235996, 0.5494892761977238, 0.005098715193299257},
    {1.0030027070661933, -2.5921033773920694, 0.005098715193299257},
    {2.1385899465235996, -0.5494892761977238, 0.005098715193299257},
    {2.1385899465235996, 2.5921033773920694, 0.005098715193299257},
    {2.1385899465235996, -2.5921033773920694, 0.005098715193299257},
    {1.1148579777833196, 0.928597385056335, 0.005098715193299257},
    {1.1148579777833196, 2.212995268533458, 0.005098715193299257},
    {1.1148579777833196, -0.928597385056335, 0.005098715193299257},
    {2.0267346758064737, 0.928597385056335, 0.005098715193299257},
    {1.1148579777833196, -2.212995268533458, 0.005098715193299257},
    {2.0267346758064737, -0.928597385056335, 0.005098715193299257},
    {2.0267346758064737, 2.212995268533458, 0.005098715193299257},
    {2.0267346758064737, -2.212995268533458, 0.005098715193299257},
    {1.0030027070661933, 1.0213070505971729, 0.005098715193299257},
    {1.0030027070661933, 2.1202856029926203, 0.005098715193299257},
    {1.0030027070661933, -1.0213070505971729, 0.005098715193299257},
    {2.1385899465235996, 1.0213070505971729, 0.005098715193299257},
    {1.0030027070661933, -2.1202856029926203, 0.005098715193299257},
    {2.1385899465235996, -1.0213070505971729, 0.005098715193299257},
    {2.1385899465235996, 2.1202856029926203, 0.005098715193299257},
    {2.1385899465235996, -2.1202856029926203, 0.005098715193299257},
    {0.8427254880419791, 0.6940145459490411, 0.005116673343615681},
    {0.8427254880419791, 2.4475781076407523, 0.005116673343615681},
    {0.8427254880419791, -0.6940145459490411, 0.005116673343615681},
    {2.298867165547814, 0.6940145459490411, 0.005116673343615681},
    {0.8427254880419791, -2.4475781076407523, 0.005116673343615681},
    {2.298867165547814, -0.6940145459490411, 0.005116673343615681},
    {2.298867165547814, 2.4475781076407523, 0.005116673343615681},
    {2.298867165547814, -2.4475781076407523, 0.005116673343615681},
    {0.8427254880419791, 0.8767817808458556, 0.005116673343615681},
    {0.8427254880419791, 2.2648108727439378, 0.005116673343615681},
    {0.8427254880419791, -0.8767817808458556, 0.005116673343615681},
    {2.298867165547814, 0.8767817808458556, 0.005116673343615681},
    {0.8427254880419791, -2.2648108727439378, 0.005116673343615681},
    {2.298867165547814, -0.8767817808458556, 0.005116673343615681},
    {2.298867165547814, 2.2648108727439378, 0.005116673343615681},
    {2.298867165547814, -2.2648108727439378, 0.005116673343615681},
    {1.0730385598669057, 0.7115836972989683, 0.005116673343615681},
    {1.0730385598669057, 2.430008956290825, 0.005116673343615681},
    {1.0730385598669057, -0.7115836972989683, 0.005116673343615681},
    {2.068554093722888, 0.7115836972989683, 0.005116673343615681},
    {1.0730385598669057, -2.430008956290825, 0.005116673343615681},
    {2.068554093722888, -0.7115836972989683, 0.005116673343615681},
    {2.068554093722888, 2.430008956290825, 0.005116673343615681},
    {2.068554093722888, -2.430008956290825, 0.005116673343615681},
    {0.9596681746763939, 0.6223845186725593, 0.005116673343615681},
    {0.9596681746763939, 2.5192081349172337, 0.005116673343615681},
    {0.9596681746763939, -0.6223845186725593, 0.005116673343615681},
    {2.181924478913399, 0.6223845186725593, 0.005116673343615681},
    {0.9596681746763939, -2.5192081349172337, 0.005116673343615681},
    {2.181924478913399, -0.6223845186725593, 0.005116673343615681},
    {2.181924478913399, 2.5192081349172337, 0.005116673343615681},
    {2.181924478913399, -2.5192081349172337, 0.005116673343615681},
    {1.0730385598669057, 0.8592126294959284, 0.005116673343615681},
    {1.0730385598669057, 2.282380024093865, 0.005116673343615681},
    {1.0730385598669057, -0.8592126294959284, 0.005116673343615681},
    {2.068554093722888, 0.8592126294959284, 0.005116673343615681},
    {1.0730385598669057, -2.282380024093865, 0.005116673343615681},
    {2.068554093722888, -0.8592126294959284, 0.005116673343615681},
    {2.068554093722888, 2.282380024093865, 0.005116673343615681},
    {2.068554093722888, -2.282380024093865, 0.005116673343615681},
    {0.9596681746763939, 0.9484118081223374, 0.005116673343615681},
    {0.9596681746763939, 2.193180845467456, 0.005116673343615681},
    {0.9596681746763939, -0.9484118081223374, 0.005116673343615681},
    {2.181924478913399, 0.9484118081223374, 0.005116673343615681},
    {0.9596681746763939, -2.193180845467456, 0.005116673343615681},
    {2.181924478913399, -0.9484118081223374, 0.005116673343615681},
    {2.181924478913399, 2.193180845467456, 0.005116673343615681},
    {2.181924478913399, -2.193180845467456, 0.005116673343615681},
    {0.2072882111423067, 0.17306887565574994, 0.0037576425746796566},
    {0.2072882111423067, 2.968523777934043, 0.0037576425746796566},
    {0.2072882111423067, -0.17306887565574994, 0.0037576425746796566},
    {2.9343044424474867, 0.17306887565574994, 0.0037576425746796566},
    {0.2072882111423067, -2.968523777934043, 0.0037576425746796566},
    {2.9343044424474867, -0.17306887565574994, 0.0037576425746796566},
    {2.9343044424474867, 2.968523777934043, 0.0037576425746796566},
    {2.9343044424474867, -2.968523777934043, 0.0037576425746796566},
    {0.2072882111423067, 1.3977274511391466, 0.0037576425746796566},
    {0.2072882111423067, 1.7438652024506465, 0.0037576425746796566},
    {0.2072882111423067, -1.3977274511391466, 0.0037576425746796566},
    {2.9343044424474867, 1.3977274511391466, 0.0037576425746796566},
    {0.2072882111423067, -1.7438652024506465, 0.0037576425746796566},
    {2.9343044424474867, -1.3977274511391466, 0.0037576425746796566},
    {2.9343044424474867, 1.7438652024506465, 0.0037576425746796566},
    {2.9343044424474867, -1.7438652024506465, 0.0037576425746796566},
    {1.5353476780433397, 0.20427756893414548, 0.0037576425746796566},
    {1.5353476780433397, 2.9373150846556477, 0.0037576425746796566},
    {1.5353476780433397, -0.20427756893414548, 0.0037576425746796566},
    {1.6062449755464536, 0.20427756893414548, 0.0037576425746796566},
    {1.5353476780433397, -2.9373150846556477, 0.0037576425746796566},
    {1.6062449755464536, -0.20427756893414548, 0.0037576425746796566},
    {1.6062449755464536, 2.9373150846556477, 0.0037576425746796566},
    {1.6062449755464536, -2.9373150846556477, 0.0037576425746796566},
    {1.366648906364817, 0.03620070423005382, 0.0037576425746796566},
    {1.366648906364817, 3.1053919493597393, 0.0037576425746796566},
    {1.366648906364817, -0.03620070423005382, 0.0037576425746796566},
    {1.7749437472249763, 0.03620070423005382, 0.0037576425746796566},
    {1.366648906364817, -3.1053919493597393, 0.0037576425746796566},
    {1.7749437472249763, -0.03620070423005382, 0.0037576425746796566},
    {1.7749437472249763, 3.1053919493597393, 0.0037576425746796566},
    {1.7749437472249763, -3.1053919493597393, 0.0037576425746796566},
    {1.5353476780433397, 1.3665187578607512, 0.0037576425746796566},
    {1.5353476780433397, 1.7750738957290422, 0.0037576425746796566},
    {1.5353476780433397, -1.3665187578607512, 0.0037576425746796566},
    {1.6062449755464536, 1.3665187578607512, 0.0037576425746796566},
    {1.5353476780433397, -1.7750738957290422, 0.0037576425746796566},
    {1.6062449755464536, -1.3665187578607512, 0.0037576425746796566},
    {1.6062449755464536, 1.7750738957290422, 0.0037576425746796566},
    {1.6062449755464536, -1.7750738957290422, 0.0037576425746796566},
    {1.366648906364817, 1.5345956225648427, 0.0037576425746796566},
    {1.366648906364817, 1.6069970310249504, 0.0037576425746796566},
    {1.366648906364817, -1.5345956225648427, 0.0037576425746796566},
    {1.7749437472249763, 1.5345956225648427, 0.0037576425746796566},
    {1.366648906364817, -1.6069970310249504, 0.0037576425746796566},
    {1.7749437472249763, -1.5345956225648427, 0.0037576425746796566},
    {1.7749437472249763, 1.6069970310249504, 0.0037576425746796566},
    {1.7749437472249763, -1.6069970310249504, 0.0037576425746796566},
    {0.2655072395578048, 0.28661933822505875, 0.004100346078888501},
    {0.2655072395578048, 2.8549733153647345, 0.004100346078888501},
    {0.2655072395578048, -0.28661933822505875, 0.004100346078888501},
    {2.8760854140319885, 0.28661933822505875, 0.004100346078888501},
    {0.2655072395578048, -2.8549733153647345, 0.004100346078888501},
    {2.8760854140319885, -0.28661933822505875, 0.004100346078888501},
    {2.8760854140319885, 2.8549733153647345, 0.004100346078888501},
    {2.8760854140319885, -2.8549733153647345, 0.004100346078888501},
    {0.2655072395578048, 1.284176988569838, 0.004100346078888501},
    {0.2655072395578048, 1.8574156650199554, 0.004100346078888501},
    {0.2655072395578048, -1.284176988569838, 0.004100346078888501},
    {2.8760854140319885, 1.284176988569838, 0.004100346078888501},
    {0.2655072395578048, -1.8574156650199554, 0.004100346078888501},
    {2.8760854140319885, -1.284176988569838, 0.004100346078888501},
    {2.8760854140319885, 1.8574156650199554, 0.004100346078888501},
    {2.8760854140319885, -1.8574156650199554, 0.004100346078888501},
    {1.4965450741121962, 0.2551490761929435, 0.004100346078888501},
    {1.4965450741121962, 2.8864435773968498, 0.004100346078888501},
    {1.4965450741121962, -0.2551490761929435, 0.004100346078888501},
    {1.6450475794775972, 0.2551490761929435, 0.004100346078888501},
    {1.4965450741121962, -2.8864435773968498, 0.004100346078888501},
    {1.6450475794775972, -0.2551490761929435, 0.004100346078888501},
    {1.6450475794775972, 2.8864435773968498, 0.004100346078888501},
    {1.6450475794775972, -2.8864435773968498, 0.004100346078888501},
    {1.3163658743179538, 0.07672593111162515, 0.004100346078888501},
    {1.3163658743179538, 3.0648667224781683, 0.004100346078888501},
    {1.3163658743179538, -0.07672593111162515, 0.004100346078888501},
    {1.8252267792718393, 0.07672593111162515, 0.004100346078888501},
    {1.3163658743179538, -3.0648667224781683, 0.004100346078888501},
    {1.8252267792718393, -0.07672593111162515, 0.004100346078888501},
    {1.8252267792718393, 3.0648667224781683, 0.004100346078888501},
    {1.8252267792718393, -3.0648667224781683, 0.004100346078888501},
    {1.4965450741121962, 1.3156472506019532, 0.004100346078888501},
    {1.4965450741121962, 1.8259454029878401, 0.004100346078888501},
    {1.4965450741121962, -1.3156472506019532, 0.004100346078888501},
    {1.6450475794775972, 1.3156472506019532, 0.004100346078888501},
    {1.4965450741121962, -1.8259454029878401, 0.004100346078888501},
    {1.6450475794775972, -1.3156472506019532, 0.004100346078888501},
    {1.6450475794775972, 1.8259454029878401, 0.004100346078888501},
    {1.6450475794775972, -1.8259454029878401, 0.004100346078888501},
    {1.3163658743179538, 1.4940703956832715, 0.004100346078888501},
    {1.3163658743179538, 1.6475222579065218, 0.004100346078888501},
    {1.3163658743179538, -1.4940703956832715, 0.004100346078888501},
    {1.8252267792718393, 1.4940703956832715, 0.004100346078888501},
    {1.3163658743179538, -1.6475222579065218, 0.004100346078888501},
    {1.8252267792718393, -1.4940703956832715, 0.004100346078888501},
    {1.8252267792718393, 1.6475222579065218, 0.004100346078888501},
    {1.8252267792718393, -1.6475222579065218, 0.004100346078888501},
    {0.3271291624592824, 0.36617721241253154, 0.0043764077201567725},
    {0.3271291624592824, 2.7754154411772616, 0.0043764077201567725},
    {0.3271291624592824, -0.36617721241253154, 0.0043764077201567725},
    {2.814463491130511, 0.36617721241253154, 0.0043764077201567725},
    {0.3271291624592824, -2.7754154411772616, 0.0043764077201567725},
    {2.814463491130511, -0.36617721241253154, 0.0043764077201567725},
    {2.814463491130511, 2.7754154411772616, 0.0043764077201567725},
    {2.814463491130511, -2.7754154411772616, 0.0043764077201567725},
    {0.3271291624592824, 1.204619114382365, 0.0043764077201567725},
    {0.3271291624592824, 1.936973539207428, 0.0043764077201567725},
    {0.3271291624592824, -1.204619114382365, 0.0043764077201567725},
    {2.814463491130511, 1.204619114382365, 0.0043764077201567725},
    {0.3271291624592824, -1.936973539207428, 0.0043764077201567725},
    {2.814463491130511, -1.204619114382365, 0.0043764077201567725},
    {2.814463491130511, 1.936973539207428, 0.0043764077201567725},
    {2.814463491130511, -1.936973539207428, 0.0043764077201567725},
    {1.4554907166315403, 0.30681967391628706, 0.0043764077201567725},
    {1.4554907166315403, 2.834772979673506, 0.0043764077201567725},
    {1.4554907166315403, -0.30681967391628706, 0.0043764077201567725},
    {1.6861019369582528, 0.30681967391628706, 0.0043764077201567725},
    {1.4554907166315403, -2.834772979673506, 0.0043764077201567725},
    {1.6861019369582528, -0.30681967391628706, 0.0043764077201567725},
    {1.6861019369582528, 2.834772979673506, 0.0043764077201567725},
    {1.6861019369582528, -2.834772979673506, 0.0043764077201567725},
    {1.2660797722925798, 0.12090068338127781, 0.0043764077201567725},
    {1.2660797722925798, 3.0206919702085155, 0.0043764077201567725},
    {1.2660797722925798, -0.12090068338127781, 0.0043764077201567725},
    {1.8755128812972135, 0.12090068338127781, 0.0043764077201567725},
    {1.2660797722925798, -3.0206919702085155, 0.0043764077201567725},
    {1.8755128812972135, -0.12090068338127781, 0.0043764077201567725},
    {1.8755128812972135, 3.0206919702085155, 0.0043764077201567725},
    {1.8755128812972135, -3.0206919702085155, 0.0043764077201567725},
    {1.4554907166315403, 1.2639766528786096, 0.0043764077201567725},
    {1.4554907166315403, 1.8776160007111837, 0.0043764077201567725},
    {1.4554907166315403, -1.2639766528786096, 0.0043764077201567725},
    {1.6861019369582528, 1.2639766528786096, 0.0043764077201567725},
    {1.4554907166315403, -1.8776160007111837, 0.0043764077201567725},
    {1.6861019369582528, -1.2639766528786096, 0.0043764077201567725},
    {1.6861019369582528, 1.8776160007111837, 0.0043764077201567725},
    {1.6861019369582528, -1.8776160007111837, 0.0043764077201567725},
    {1.2660797722925798, 1.4498956434136188, 0.0043764077201567725},
    {1.2660797722925798, 1.6916970101761744, 0.0043764077201567725},
    {1.2660797722925798, -1.4498956434136188, 0.0043764077201567725},
    {1.8755128812972135, 1.4498956434136188, 0.0043764077201567725},
    {1.2660797722925798, -1.6916970101761744, 0.0043764077201567725},
    {1.8755128812972135, -1.4498956434136188, 0.0043764077201567725},
    {1.8755128812972135, 1.6916970101761744, 0.0043764077201567725},
    {1.8755128812972135, -1.6916970101761744, 0.0043764077201567725},
    {0.39129263835251543, 0.42483861571594844, 0.004595014908948935},
    {0.39129263835251543, 2.716754037873845, 0.004595014908948935},
    {0.39129263835251543, -0.42483861571594844, 0.004595014908948935},
    {2.750300015237278, 0.42483861571594844, 0.004595014908948935},
    {0.39129263835251543, -2.716754037873845, 0.004595014908948935},
    {2.750300015237278, -0.42483861571594844, 0.004595014908948935},
    {2.750300015237278, 2.716754037873845, 0.004595014908948935},
    {2.750300015237278, -2.716754037873845, 0.004595014908948935},
    {0.39129263835251543, 1.1459577110789483, 0.004595014908948935},
    {0.39129263835251543, 1.995634942510845, 0.004595014908948935},
    {0.39129263835251543, -1.1459577110789483, 0.004595014908948935},
    {2.750300015237278, 1.1459577110789483, 0.004595014908948935},
    {0.39129263835251543, -1.995634942510845, 0.004595014908948935},
    {2.750300015237278, -1.1459577110789483, 0.004595014908948935},
    {2.750300015237278, 1.995634942510845, 0.004595014908948935},
    {2.750300015237278, -1.995634942510845, 0.004595014908948935},
    {1.4129452780009442, 0.35955225388698625, 0.004595014908948935},
    {1.4129452780009442, 2.782040399702807, 0.004595014908948935},
    {1.4129452780009442, -0.35955225388698625, 0.004595014908948935},
    {1.728647375588849, 0.35955225388698625, 0.004595014908948935},
    {1.4129452780009442, -2.782040399702807, 0.004595014908948935},
    {1.728647375588849, -0.35955225388698625, 0.004595014908948935},
    {1.728647375588849, 2.782040399702807, 0.004595014908948935},
    {1.728647375588849, -2.782040399702807, 0.004595014908948935},
    {1.215913315184549, 0.1684379672655321, 0.004595014908948935},
    {1.215913315184549, 2.973154686324261, 0.004595014908948935},
    {1.215913315184549, -0.1684379672655321, 0.004595014908948935},
    {1.9256793384052442, 0.1684379672655321, 0.004595014908948935},
    {1.215913315184549, -2.973154686324261, 0.004595014908948935},
    {1.9256793384052442, -0.1684379672655321, 0.004595014908948935},
    {1.9256793384052442, 2.973154686324261, 0.004595014908948935},
    {1.9256793384052442, -2.973154686324261, 0.004595014908948935},
    {1.4129452780009442, 1.2112440729079104, 0.004595014908948935},
    {1.4129452780009442, 1.930348580681883, 0.004595014908948935},
    {1.4129452780009442, -1.2112440729079104, 0.004595014908948935},
    {1.728647375588849, 1.2112440729079104, 0.004595014908948935},
    {1.4129452780009442, -1.930348580681883, 0.004595014908948935},
    {1.728647375588849, -1.2112440729079104, 0.004595014908948935},
    {1.728647375588849, 1.930348580681883, 0.004595014908948935},
    {1.728647375588849, -1.930348580681883, 0.004595014908948935},
    {1.215913315184549, 1.4023583595293645, 0.004595014908948935},
    {1.215913315184549, 1.7392342940604286, 0.004595014908948935},
    {1.215913315184549, -1.4023583595293645, 0.004595014908948935},
    {1.9256793384052442, 1.4023583595293645, 0.004595014908948935},
    {1.215913315184549, -1.7392342940604286, 0.004595014908948935},
    {1.9256793384052442, -1.4023583595293645, 0.004595014908948935},
    {1.9256793384052442, 1.7392342940604286, 0.004595014908948935},
    {1.9256793384052442, -1.7392342940604286, 0.004595014908948935},
    {0.4574585265610007, 0.46984048000472817, 0.004764841599176576},
    {0.4574585265610007, 2.671752173585065, 0.004764841599176576},
    {0.4574585265610007, -0.46984048000472817, 0.004764841599176576},
    {2.6841341270287926, 0.46984048000472817, 0.004764841599176576},
    {0.4574585265610007, -2.671752173585065, 0.004764841599176576},
    {2.6841341270287926, -0.46984048000472817, 0.004764841599176576},
    {2.6841341270287926, 2.671752173585065, 0.004764841599176576},
    {2.6841341270287926, -2.671752173585065, 0.004764841599176576},
    {0.4574585265610007, 1.1009558467901683, 0.004764841599176576},
    {0.4574585265610007, 2.0406368067996246, 0.004764841599176576},
    {0.4574585265610007, -1.1009558467901683, 0.004764841599176576},
    {2.6841341270287926, 1.1009558467901683, 0.004764841599176576},
    {0.4574585265610007, -2.0406368067996246, 0.004764841599176576},
    {2.6841341270287926, -1.1009558467901683, 0.004764841599176576},
    {2.6841341270287926, 2.0406368067996246, 0.004764841599176576},
    {2.6841341270287926, -2.0406368067996246, 0.004764841599176576},
    {1.3694759772316423, 0.41362131514037065, 0.004764841599176576},
    {1.3694759772316423, 2.7279713384494224, 0.004764841599176576},
    {1.3694759772316423, -0.41362131514037065, 0.004764841599176576},
    {1.772116676358151, 0.41362131514037065, 0.004764841599176576},
    {1.3694759772316423, -2.7279713384494224, 0.004764841599176576},
    {1.772116676358151, -0.41362131514037065, 0.004764841599176576},
    {1.772116676358151, 2.7279713384494224, 0.004764841599176576},
    {1.772116676358151, -2.7279713384494224, 0.004764841599176576},
    {1.166023104796389, 0.2192958739639784, 0.004764841599176576},
    {1.166023104796389, 2.922296779625815, 0.004764841599176576},
    {1.166023104796389, -0.2192958739639784, 0.004764841599176576},
    {1.9755695487934042, 0.2192958739639784, 0.004764841599176576},
    {1.166023104796389, -2.922296779625815, 0.004764841599176576},
    {1.9755695487934042, -0.2192958739639784, 0.004764841599176576},
    {1.9755695487934042, 2.922296779625815, 0.004764841599176576},
    {1.9755695487934042, -2.922296779625815, 0.004764841599176576},
    {1.3694759772316423, 1.1571750116545259, 0.004764841599176576},
    {1.3694759772316423, 1.9844176419352673, 0.004764841599176576},
    {1.3694759772316423, -1.1571750116545259, 0.004764841599176576},
    {1.772116676358151, 1.1571750116545259, 0.004764841599176576},
    {1.3694759772316423, -1.9844176419352673, 0.004764841599176576},
    {1.772116676358151, -1.1571750116545259, 0.004764841599176576},
    {1.772116676358151, 1.9844176419352673, 0.004764841599176576},
    {1.772116676358151, -1.9844176419352673, 0.004764841599176576},
    {1.166023104796389, 1.3515004528309182, 0.004764841599176576},
    {1.166023104796389, 1.790092200758875, 0.004764841599176576},
    {1.166023104796389, -1.3515004528309182, 0.004764841599176576},
    {1.9755695487934042, 1.3515004528309182, 0.004764841599176576},
    {1.166023104796389, -1.790092200758875, 0.004764841599176576},
    {1.9755695487934042, -1.3515004528309182, 0.004764841599176576},
    {1.9755695487934042, 1.790092200758875, 0.004764841599176576},
    {1.9755695487934042, -1.790092200758875, 0.004764841599176576},
    {0.5252814926535068, 0.5054533373648397, 0.004893388008575401},
    {0.5252814926535068, 2.636139316224954, 0.004893388008575401},
    {0.5252814926535068, -0.5054533373648397, 0.004893388008575401},
    {2.6163111609362866, 0.5054533373648397, 0.004893388008575401},
    {0.5252814926535068, -2.636139316224954, 0.004893388008575401},
    {2.6163111609362866, -0.5054533373648397, 0.004893388008575401},
    {2.6163111609362866, 2.636139316224954, 0.004893388008575401},
    {2.6163111609362866, -2.636139316224954, 0.004893388008575401},
    {0.5252814926535068, 1.065342989430057, 0.004893388008575401},
    {0.5252814926535068, 2.0762496641597363, 0.004893388008575401},
    {0.5252814926535068, -1.065342989430057, 0.004893388008575401},
    {2.6163111609362866, 1.065342989430057, 0.004893388008575401},
    {0.5252814926535068, -2.0762496641597363, 0.004893388008575401},
    {2.6163111609362866, -1.065342989430057, 0.004893388008575401},
    {2.6163111609362866, 2.0762496641597363, 0.004893388008575401},
    {2.6163111609362866, -2.0762496641597363, 0.004893388008575401},
    {1.3255375705213495, 0.46932778329266867, 0.004893388008575401},
    {1.3255375705213495, 2.6722648702971243, 0.004893388008575401},
    {1.3255375705213495, -0.46932778329266867, 0.004893388008575401},
    {1.8160550830684437, 0.46932778329266867, 0.004893388008575401},
    {1.3255375705213495, -2.6722648702971243, 0.004893388008575401},
    {1.8160550830684437, -0.46932778329266867, 0.004893388008575401},
    {1.8160550830684437, 2.6722648702971243, 0.004893388008575401},
    {1.8160550830684437, -2.6722648702971243, 0.004893388008575401},
    {1.1165869850213785, 0.27360468978889096, 0.004893388008575401},
    {1.1165869850213785, 2.8679879638009025, 0.004893388008575401},
    {1.1165869850213785, -0.27360468978889096, 0.004893388008575401},
    {2.0250056685684146, 0.27360468978889096, 0.004893388008575401},
    {1.1165869850213785, -2.8679879638009025, 0.004893388008575401},
    {2.0250056685684146, -0.27360468978889096, 0.004893388008575401},
    {2.0250056685684146, 2.8679879638009025, 0.004893388008575401},
    {2.0250056685684146, -2.8679879638009025, 0.004893388008575401},
    {1.3255375705213495, 1.101468543502228, 0.004893388008575401},
    {1.3255375705213495, 2.0401241100875653, 0.004893388008575401},
    {1.3255375705213495, -1.101468543502228, 0.004893388008575401},
    {1.8160550830684437, 1.101468543502228, 0.004893388008575401},
    {1.3255375705213495, -2.0401241100875653, 0.004893388008575401},
    {1.8160550830684437, -1.101468543502228, 0.004893388008575401},
    {1.8160550830684437, 2.0401241100875653, 0.004893388008575401},
    {1.8160550830684437, -2.0401241100875653, 0.004893388008575401},
    {1.1165869850213785, 1.2971916370060057, 0.004893388008575401},
    {1.1165869850213785, 1.8444010165837876, 0.004893388008575401},
    {1.1165869850213785, -1.2971916370060057, 0.004893388008575401},
    {2.0250056685684146, 1.2971916370060057, 0.004893388008575401},
    {1.1165869850213785, -1.8444010165837876, 0.004893388008575401},
    {2.0250056685684146, -1.2971916370060057, 0.004893388008575401},
    {2.0250056685684146, 1.8444010165837876, 0.004893388008575401},
    {2.0250056685684146, -1.8444010165837876, 0.004893388008575401},
    {0.594541444280683, 0.5343376792249287, 0.004987090150529499},
    {0.594541444280683, 2.6072549743648645, 0.004987090150529499},
    {0.594541444280683, -0.5343376792249287, 0.004987090150529499},
    {2.54705120930911, 0.5343376792249287, 0.004987090150529499},
    {0.594541444280683, -2.6072549743648645, 0.004987090150529499},
    {2.54705120930911, -0.5343376792249287, 0.004987090150529499},
    {2.54705120930911, 2.6072549743648645, 0.004987090150529499},
    {2.54705120930911, -2.6072549743648645, 0.004987090150529499},
    {0.594541444280683, 1.036458647569968, 0.004987090150529499},
    {0.594541444280683, 2.105134006019825, 0.004987090150529499},
    {0.594541444280683, -1.036458647569968, 0.004987090150529499},
    {2.54705120930911, 1.036458647569968, 0.004987090150529499},
    {0.594541444280683, -2.105134006019825, 0.004987090150529499},
    {2.54705120930911, -1.036458647569968, 0.004987090150529499},
    {2.54705120930911, 2.105134006019825, 0.004987090150529499},
    {2.54705120930911, -2.105134006019825, 0.004987090150529499},
    {1.281521232803145, 0.5270054988773445, 0.004987090150529499},
    {1.281521232803145, 2.614587154712449, 0.004987090150529499},
    {1.281521232803145, -0.5270054988773445, 0.004987090150529499},
    {1.8600714207866484, 0.5270054988773445, 0.004987090150529499},
    {1.281521232803145, -2.614587154712449, 0.004987090150529499},
    {1.8600714207866484, -0.5270054988773445, 0.004987090150529499},
    {1.8600714207866484, 2.614587154712449, 0.004987090150529499},
    {1.8600714207866484, -2.614587154712449, 0.004987090150529499},
    {1.06780286559823, 0.33162836421802294, 0.004987090150529499},
    {1.06780286559823, 2.8099642893717705, 0.004987090150529499},
    {1.06780286559823, -0.33162836421802294, 0.004987090150529499},
    {2.073789787991563, 0.33162836421802294, 0.004987090150529499},
    {1.06780286559823, -2.8099642893717705, 0.004987090150529499},
    {2.073789787991563, -0.33162836421802294, 0.004987090150529499},
    {2.073789787991563, 2.8099642893717705, 0.004987090150529499},
    {2.073789787991563, -2.8099642893717705, 0.004987090150529499},
    {1.281521232803145, 1.043790827917552, 0.004987090150529499},
    {1.281521232803145, 2.0978018256722413, 0.004987090150529499},
    {1.281521232803145, -1.043790827917552, 0.004987090150529499},
    {1.8600714207866484, 1.043790827917552, 0.004987090150529499},
    {1.281521232803145, -2.0978018256722413, 0.004987090150529499},
    {1.8600714207866484, -1.043790827917552, 0.004987090150529499},
    {1.8600714207866484, 2.0978018256722413, 0.004987090150529499},
    {1.8600714207866484, -2.0978018256722413, 0.004987090150529499},
    {1.06780286559823, 1.2391679625768737, 0.004987090150529499},
    {1.06780286559823, 1.9024246910129197, 0.004987090150529499},
    {1.06780286559823, -1.2391679625768737, 0.004987090150529499},
    {2.073789787991563, 1.2391679625768737, 0.004987090150529499},
    {1.06780286559823, -1.9024246910129197, 0.004987090150529499},
    {2.073789787991563, -1.2391679625768737, 0.004987090150529499},
    {2.073789787991563, 1.9024246910129197, 0.004987090150529499},
    {2.073789787991563, -1.9024246910129197, 0.004987090150529499},
    {0.6651047113143274, 0.5582249621421254, 0.005051594720622607},
    {0.6651047113143274, 2.583367691447668, 0.005051594720622607},
    {0.6651047113143274, -0.5582249621421254, 0.005051594720622607},
    {2.4764879422754658, 0.5582249621421254, 0.005051594720622607},
    {0.6651047113143274, -2.583367691447668, 0.005051594720622607},
    {2.4764879422754658, -0.5582249621421254, 0.005051594720622607},
    {2.4764879422754658, 2.583367691447668, 0.005051594720622607},
    {2.4764879422754658, -2.583367691447668, 0.005051594720622607},
    {0.6651047113143274, 1.0125713646527712, 0.005051594720622607},
    {0.6651047113143274, 2.129021288937022, 0.005051594720622607},
    {0.6651047113143274, -1.0125713646527712, 0.005051594720622607},
    {2.4764879422754658, 1.0125713646527712, 0.005051594720622607},
    {0.6651047113143274, -2.129021288937022, 0.005051594720622607},
    {2.4764879422754658, -1.0125713646527712, 0.005051594720622607},
    {2.4764879422754658, 2.129021288937022, 0.005051594720622607},
    {2.4764879422754658, -2.129021288937022, 0.005051594720622607},
    {1.2377870915604747, 0.5870246933539284, 0.005051594720622607},
    {1.2377870915604747, 2.5545679602358646, 0.005051594720622607},
    {1.2377870915604747, -0.5870246933539284, 0.005051594720622607},
    {1.9038055620293186, 0.5870246933539284, 0.005051594720622607},
    {1.2377870915604747, -2.5545679602358646, 0.005051594720622607},
    {1.9038055620293186, -0.5870246933539284, 0.005051594720622607},
    {1.9038055620293186, 2.5545679602358646, 0.005051594720622607},
    {1.9038055620293186, -2.5545679602358646, 0.005051594720622607},
    {1.019892701856562, 0.39374389286804307, 0.005051594720622607},
    {1.019892701856562, 2.7478487607217503, 0.005051594720622607},
    {1.019892701856562, -0.39374389286804307, 0.005051594720622607},
    {2.1216999517332313, 0.39374389286804307, 0.005051594720622607},
    {1.019892701856562, -2.7478487607217503, 0.005051594720622607},
    {2.1216999517332313, -0.39374389286804307, 0.005051594720622607},
    {2.1216999517332313, 2.7478487607217503, 0.005051594720622607},
    {2.1216999517332313, -2.7478487607217503, 0.005051594720622607},
    {1.2377870915604747, 0.9837716334409683, 0.005051594720622607},
    {1.2377870915604747, 2.157821020148825, 0.005051594720622607},
    {1.2377870915604747, -0.9837716334409683, 0.005051594720622607},
    {1.9038055620293186, 0.9837716334409683, 0.005051594720622607},
    {1.2377870915604747, -2.157821020148825, 0.005051594720622607},
    {1.9038055620293186, -0.9837716334409683, 0.005051594720622607},
    {1.9038055620293186, 2.157821020148825, 0.005051594720622607},
    {1.9038055620293186, -2.157821020148825, 0.005051594720622607},
    {1.019892701856562, 1.1770524339268535, 0.005051594720622607},
    {1.019892701856562, 1.9645402196629398, 0.005051594720622607},
    {1.019892701856562, -1.1770524339268535, 0.005051594720622607},
    {2.1216999517332313, 1.1770524339268535, 0.005051594720622607},
    {1.019892701856562, -1.9645402196629398, 0.005051594720622607},
    {2.1216999517332313, -1.1770524339268535, 0.005051594720622607},
    {2.1216999517332313, 1.9645402196629398, 0.005051594720622607},
    {2.1216999517332313, -1.9645402196629398, 0.005051594720622607},
    {0.7369010460332474, 0.5782812196118094, 0.005092030096657356},
    {0.7369010460332474, 2.563311433977984, 0.005092030096657356},
    {0.7369010460332474, -0.5782812196118094, 0.005092030096657356},
    {2.404691607556546, 0.5782812196118094, 0.005092030096657356},
    {0.7369010460332474, -2.563311433977984, 0.005092030096657356},
    {2.404691607556546, -0.5782812196118094, 0.005092030096657356},
    {2.404691607556546, 2.563311433977984, 0.005092030096657356},
    {2.404691607556546, -2.563311433977984, 0.005092030096657356},
    {0.7369010460332474, 0.9925151071830871, 0.005092030096657356},
    {0.7369010460332474, 2.1490775464067062, 0.005092030096657356},
    {0.7369010460332474, -0.9925151071830871, 0.005092030096657356},
    {2.404691607556546, 0.9925151071830871, 0.005092030096657356},
    {0.7369010460332474, -2.1490775464067062, 0.005092030096657356},
    {2.404691607556546, -0.9925151071830871, 0.005092030096657356},
    {2.404691607556546, 2.1490775464067062, 0.005092030096657356},
    {2.404691607556546, -2.1490775464067062, 0.005092030096657356},
    {1.1946882991880112, 0.6497937276537272, 0.005092030096657356},
    {1.1946882991880112, 2.491798925936066, 0.005092030096657356},
    {1.1946882991880112, -0.6497937276537272, 0.005092030096657356},
    {1.9469043544017821, 0.6497937276537272, 0.005092030096657356},
    {1.1946882991880112, -2.491798925936066, 0.005092030096657356},
    {1.9469043544017821, -0.6497937276537272, 0.005092030096657356},
    {1.9469043544017821, 2.491798925936066, 0.005092030096657356},
    {1.9469043544017821, -2.491798925936066, 0.005092030096657356},
    {0.9731094461785187, 0.46042976033733307, 0.005092030096657356},
    {0.9731094461785187, 2.68116289325246, 0.005092030096657356},
    {0.9731094461785187, -0.46042976033733307, 0.005092030096657356},
    {2.1684832074112745, 0.46042976033733307, 0.005092030096657356},
    {0.9731094461785187, -2.68116289325246, 0.005092030096657356},
    {2.1684832074112745, -0.46042976033733307, 0.005092030096657356},
    {2.1684832074112745, 2.68116289325246, 0.005092030096657356},
    {2.1684832074112745, -2.68116289325246, 0.005092030096657356},
    {1.1946882991880112, 0.9210025991411693, 0.005092030096657356},
    {1.1946882991880112, 2.220590054448624, 0.005092030096657356},
    {1.1946882991880112, -0.9210025991411693, 0.005092030096657356},
    {1.9469043544017821, 0.9210025991411693, 0.005092030096657356},
    {1.1946882991880112, -2.220590054448624, 0.005092030096657356},
    {1.9469043544017821, -0.9210025991411693, 0.005092030096657356},
    {1.9469043544017821, 2.220590054448624, 0.005092030096657356},
    {1.9469043544017821, -2.220590054448624, 0.005092030096657356},
    {0.9731094461785187, 1.1103665664575635, 0.005092030096657356},
    {0.9731094461785187, 2.0312260871322296, 0.005092030096657356},
    {0.9731094461785187, -1.1103665664575635, 0.005092030096657356},
    {2.1684832074112745, 1.1103665664575635, 0.005092030096657356},
    {0.9731094461785187, -2.0312260871322296, 0.005092030096657356},
    {2.1684832074112745, -1.1103665664575635, 0.005092030096657356},
    {2.1684832074112745, 2.0312260871322296, 0.005092030096657356},
    {2.1684832074112745, -2.0312260871322296, 0.005092030096657356},
    {0.8099093755907715, 0.5953116186858679, 0.005113229328468327},
    {0.8099093755907715, 2.5462810349039255, 0.005113229328468327},
    {0.8099093755907715, -0.5953116186858679, 0.005113229328468327},
    {2.331683277999022, 0.5953116186858679, 0.005113229328468327},
    {0.8099093755907715, -2.5462810349039255, 0.005113229328468327},
    {2.331683277999022, -0.5953116186858679, 0.005113229328468327},
    {2.331683277999022, 2.5462810349039255, 0.005113229328468327},
    {2.331683277999022, -2.5462810349039255, 0.005113229328468327},
    {0.8099093755907715, 0.9754847081090287, 0.005113229328468327},
    {0.8099093755907715, 2.1661079454807646, 0.005113229328468327},
    {0.8099093755907715, -0.9754847081090287, 0.005113229328468327},
    {2.331683277999022, 0.9754847081090287, 0.005113229328468327},
    {0.8099093755907715, -2.1661079454807646, 0.005113229328468327},
    {2.331683277999022, -0.9754847081090287, 0.005113229328468327},
    {2.331683277999022, 2.1661079454807646, 0.005113229328468327},
    {2.331683277999022, -2.1661079454807646, 0.005113229328468327},
    {1.1525909407249426, 0.7157585624107973, 0.005113229328468327},
    {1.1525909407249426, 2.425834091178996, 0.005113229328468327},
    {1.1525909407249426, -0.7157585624107973, 0.005113229328468327},
    {1.9890017128648507, 0.7157585624107973, 0.005113229328468327},
    {1.1525909407249426, -2.425834091178996, 0.005113229328468327},
    {1.9890017128648507, -0.7157585624107973, 0.005113229328468327},
    {1.9890017128648507, 2.425834091178996, 0.005113229328468327},
    {1.9890017128648507, -2.425834091178996, 0.005113229328468327},
    {0.9277463158138296, 0.5322574593923599, 0.005113229328468327},
    {0.9277463158138296, 2.6093351941974334, 0.005113229328468327},
    {0.9277463158138296, -0.5322574593923599, 0.005113229328468327},
    {2.213846337775964, 0.5322574593923599, 0.005113229328468327},
    {0.9277463158138296, -2.6093351941974334, 0.005113229328468327},
    {2.213846337775964, -0.5322574593923599, 0.005113229328468327},
    {2.213846337775964, 2.6093351941974334, 0.005113229328468327},
    {2.213846337775964, -2.6093351941974334, 0.005113229328468327},
    {1.1525909407249426, 0.8550377643840994, 0.005113229328468327},
    {1.1525909407249426, 2.2865548892056937, 0.005113229328468327},
    {1.1525909407249426, -0.8550377643840994, 0.005113229328468327},
    {1.9890017128648507, 0.8550377643840994, 0.005113229328468327},
    {1.1525909407249426, -2.2865548892056937, 0.005113229328468327},
    {1.9890017128648507, -0.8550377643840994, 0.005113229328468327},
    {1.9890017128648507, 2.2865548892056937, 0.005113229328468327},
    {1.9890017128648507, -2.2865548892056937, 0.005113229328468327},
    {0.9277463158138296, 1.0385388674025366, 0.005113229328468327},
    {0.9277463158138296, 2.1030537861872567, 0.005113229328468327},
    {0.9277463158138296, -1.0385388674025366, 0.005113229328468327},
    {2.213846337775964, 1.0385388674025366, 0.005113229328468327},
    {0.9277463158138296, -2.1030537861872567, 0.005113229328468327},
    {2.213846337775964, -1.0385388674025366, 0.005113229328468327},
    {2.213846337775964, 2.1030537861872567, 0.005113229328468327},
    {2.213846337775964, -2.1030537861872567, 0.005113229328468327},
    {0.3161228409662241, 0.12448744070142198, 0.004340770426872914},
    {0.3161228409662241, 3.0171052128883713, 0.004340770426872914},
    {0.3161228409662241, -0.12448744070142198, 0.004340770426872914},
    {2.8254698126235693, 0.12448744070142198, 0.004340770426872914},
    {0.3161228409662241, -3.0171052128883713, 0.004340770426872914},
    {2.8254698126235693, -0.12448744070142198, 0.004340770426872914},
    {2.8254698126235693, 3.0171052128883713, 0.004340770426872914},
    {2.8254698126235693, -3.0171052128883713, 0.004340770426872914},
    {0.3161228409662241, 1.4463088860934747, 0.004340770426872914},
    {0.3161228409662241, 1.6952837674963186, 0.004340770426872914},
    {0.3161228409662241, -1.4463088860934747, 0.004340770426872914},
    {2.8254698126235693, 1.4463088860934747, 0.004340770426872914},
    {0.3161228409662241, -1.6952837674963186, 0.004340770426872914},
    {2.8254698126235693, -1.4463088860934747, 0.004340770426872914},
    {2.8254698126235693, 1.6952837674963186, 0.004340770426872914},
    {2.8254698126235693, -1.6952837674963186, 0.004340770426872914},
    {1.532185478785814, 0.31383455215528844, 0.004340770426872914},
    {1.532185478785814, 2.8277581014345046, 0.004340770426872914},
    {1.532185478785814, -0.31383455215528844, 0.004340770426872914},
    {1.6094071748039793, 0.31383455215528844, 0.004340770426872914},
    {1.532185478785814, -2.8277581014345046, 0.004340770426872914},
    {1.6094071748039793, -0.31383455215528844, 0.004340770426872914},
    {1.6094071748039793, 2.8277581014345046, 0.004340770426872914},
    {1.6094071748039793, -2.8277581014345046, 0.004340770426872914},
    {1.2572036622766505, 0.04059144330793828, 0.004340770426872914},
    {1.2572036622766505, 3.101001210281855, 0.004340770426872914},
    {1.2572036622766505, -0.04059144330793828, 0.004340770426872914},
    {1.8843889913131426, 0.04059144330793828, 0.004340770426872914},
    {1.2572036622766505, -3.101001210281855, 0.004340770426872914},
    {1.8843889913131426, -0.04059144330793828, 0.004340770426872914},
    {1.8843889913131426, 3.101001210281855, 0.004340770426872914},
    {1.8843889913131426, -3.101001210281855, 0.004340770426872914},
    {1.532185478785814, 1.2569617746396082, 0.004340770426872914},
    {1.532185478785814, 1.884630878950185, 0.004340770426872914},
    {1.532185478785814, -1.2569617746396082, 0.004340770426872914},
    {1.6094071748039793, 1.2569617746396082, 0.004340770426872914},
    {1.532185478785814, -1.884630878950185, 0.004340770426872914},
    {1.6094071748039793, -1.2569617746396082, 0.004340770426872914},
    {1.6094071748039793, 1.884630878950185, 0.004340770426872914},
    {1.6094071748039793, -1.884630878950185, 0.004340770426872914},
    {1.2572036622766505, 1.5302048834869584, 0.004340770426872914},
    {1.2572036622766505, 1.611387770102835, 0.004340770426872914},
    {1.2572036622766505, -1.5302048834869584, 0.004340770426872914},
    {1.8843889913131426, 1.5302048834869584, 0.004340770426872914},
    {1.2572036622766505, -1.611387770102835, 0.004340770426872914},
    {1.8843889913131426, -1.5302048834869584, 0.004340770426872914},
    {1.8843889913131426, 1.611387770102835, 0.004340770426872914},
    {1.8843889913131426, -1.611387770102835, 0.004340770426872914},
    {0.3764814235302099, 0.2173728681468939, 0.004561546712265161},
    {0.3764814235302099, 2.9242197854428995, 0.004561546712265161},
    {0.3764814235302099, -0.2173728681468939, 0.004561546712265161},
    {2.7651112300595835, 0.2173728681468939, 0.004561546712265161},
    {0.3764814235302099, -2.9242197854428995, 0.004561546712265161},
    {2.7651112300595835, -0.2173728681468939, 0.004561546712265161},
    {2.7651112300595835, 2.9242197854428995, 0.004561546712265161},
    {2.7651112300595835, -2.9242197854428995, 0.004561546712265161},
    {0.3764814235302099, 1.3534234586480027, 0.004561546712265161},
    {0.3764814235302099, 1.7881691949417906, 0.004561546712265161},
    {0.3764814235302099, -1.3534234586480027, 0.004561546712265161},
    {2.7651112300595835, 1.3534234586480027, 0.004561546712265161},
    {0.3764814235302099, -1.7881691949417906, 0.004561546712265161},
    {2.7651112300595835, -1.3534234586480027, 0.004561546712265161},
    {2.7651112300595835, 1.7881691949417906, 0.004561546712265161},
    {2.7651112300595835, -1.7881691949417906, 0.004561546712265161},
    {1.4914236214835175, 0.3684100854747415, 0.004561546712265161},
    {1.4914236214835175, 2.7731825681150517, 0.004561546712265161},
    {1.4914236214835175, -0.3684100854747415, 0.004561546712265161},
    {1.6501690321062759, 0.3684100854747415, 0.004561546712265161},
    {1.4914236214835175, -2.7731825681150517, 0.004561546712265161},
    {1.6501690321062759, -0.3684100854747415, 0.004561546712265161},
    {1.6501690321062759, 2.7731825681150517, 0.004561546712265161},
    {1.6501690321062759, -2.7731825681150517, 0.004561546712265161},
    {1.2036013342939995, 0.085055007926137, 0.004561546712265161},
    {1.2036013342939995, 3.0565376456636564, 0.004561546712265161},
    {1.2036013342939995, -0.085055007926137, 0.004561546712265161},
    {1.9379913192957936, 0.085055007926137, 0.004561546712265161},
    {1.2036013342939995, -3.0565376456636564, 0.004561546712265161},
    {1.9379913192957936, -0.085055007926137, 0.004561546712265161},
    {1.9379913192957936, 3.0565376456636564, 0.004561546712265161},
    {1.9379913192957936, -3.0565376456636564, 0.004561546712265161},
    {1.4914236214835175, 1.2023862413201551, 0.004561546712265161},
    {1.4914236214835175, 1.9392064122696382, 0.004561546712265161},
    {1.4914236214835175, -1.2023862413201551, 0.004561546712265161},
    {1.6501690321062759, 1.2023862413201551, 0.004561546712265161},
    {1.4914236214835175, -1.9392064122696382, 0.004561546712265161},
    {1.6501690321062759, -1.2023862413201551, 0.004561546712265161},
    {1.6501690321062759, 1.9392064122696382, 0.004561546712265161},
    {1.6501690321062759, -1.9392064122696382, 0.004561546712265161},
    {1.2036013342939995, 1.4857413188687596, 0.004561546712265161},
    {1.2036013342939995, 1.6558513347210337, 0.004561546712265161},
    {1.2036013342939995, -1.4857413188687596, 0.004561546712265161},
    {1.9379913192957936, 1.4857413188687596, 0.004561546712265161},
    {1.2036013342939995, -1.6558513347210337, 0.004561546712265161},
    {1.9379913192957936, -1.4857413188687596, 0.004561546712265161},
    {1.9379913192957936, 1.6558513347210337, 0.004561546712265161},
    {1.9379913192957936, -1.6558513347210337, 0.004561546712265161},
    {0.4395223634735616, 0.288986546915224, 0.0047377570066585795},
    {0.4395223634735616, 2.8526061066745694, 0.0047377570066585795},
    {0.4395223634735616, -0.288986546915224, 0.0047377570066585795},
    {2.7020702901162315, 0.288986546915224, 0.0047377570066585795},
    {0.4395223634735616, -2.8526061066745694, 0.0047377570066585795},
    {2.7020702901162315, -0.288986546915224, 0.0047377570066585795},
    {2.7020702901162315, 2.8526061066745694, 0.0047377570066585795},
    {2.7020702901162315, -2.8526061066745694, 0.0047377570066585795},
    {0.4395223634735616, 1.2818097798796726, 0.0047377570066585795},
    {0.4395223634735616, 1.8597828737101207, 0.0047377570066585795},
    {0.4395223634735616, -1.2818097798796726, 0.0047377570066585795},
    {2.7020702901162315, 1.2818097798796726, 0.0047377570066585795},
    {0.4395223634735616, -1.8597828737101207, 0.0047377570066585795},
    {2.7020702901162315, -1.2818097798796726, 0.0047377570066585795},
    {2.7020702901162315, 1.8597828737101207, 0.0047377570066585795},
    {2.7020702901162315, -1.8597828737101207, 0.0047377570066585795},
    {1.4492357003359022, 0.42343554626035385, 0.0047377570066585795},
    {1.4492357003359022, 2.7181571073294393, 0.0047377570066585795},
    {1.4492357003359022, -0.42343554626035385, 0.0047377570066585795},
    {1.6923569532538911, 0.42343554626035385, 0.0047377570066585795},
    {1.4492357003359022, -2.7181571073294393, 0.0047377570066585795},
    {1.6923569532538911, -0.42343554626035385, 0.0047377570066585795},
    {1.6923569532538911, 2.7181571073294393, 0.0047377570066585795},
    {1.6923569532538911, -2.7181571073294393, 0.0047377570066585795},
    {1.1506841897531943, 0.13320377619206344, 0.0047377570066585795},
    {1.1506841897531943, 3.0083888773977296, 0.0047377570066585795},
    {1.1506841897531943, -0.13320377619206344, 0.0047377570066585795},
    {1.9909084638365988, 0.13320377619206344, 0.0047377570066585795},
    {1.1506841897531943, -3.0083888773977296, 0.0047377570066585795},
    {1.9909084638365988, -0.13320377619206344, 0.0047377570066585795},
    {1.9909084638365988, 3.0083888773977296, 0.0047377570066585795},
    {1.9909084638365988, -3.0083888773977296, 0.0047377570066585795},
    {1.4492357003359022, 1.1473607805345427, 0.0047377570066585795},
    {1.4492357003359022, 1.9942318730552504, 0.0047377570066585795},
    {1.4492357003359022, -1.1473607805345427, 0.0047377570066585795},
    {1.6923569532538911, 1.1473607805345427, 0.0047377570066585795},
    {1.4492357003359022, -1.9942318730552504, 0.0047377570066585795},
    {1.6923569532538911, -1.1473607805345427, 0.0047377570066585795},
    {1.6923569532538911, 1.9942318730552504, 0.0047377570066585795},
    {1.6923569532538911, -1.9942318730552504, 0.0047377570066585795},
    {1.1506841897531943, 1.437592550602833, 0.0047377570066585795},
    {1.1506841897531943, 1.70400010298696, 0.0047377570066585795},
    {1.1506841897531943, -1.437592550602833, 0.0047377570066585795},
    {1.9909084638365988, 1.437592550602833, 0.0047377570066585795},
    {1.1506841897531943, -1.70400010298696, 0.0047377570066585795},
    {1.9909084638365988, -1.437592550602833, 0.0047377570066585795},
    {1.9909084638365988, 1.70400010298696, 0.0047377570066585795},
    {1.9909084638365988, -1.70400010298696, 0.0047377570066585795},
    {0.5047002436391393, 0.3457554959812175, 0.00487400333077294},
    {0.5047002436391393, 2.7958371576085757, 0.00487400333077294},
    {0.5047002436391393, -0.3457554959812175, 0.00487400333077294},
    {2.636892409950654, 0.3457554959812175, 0.00487400333077294},
    {0.5047002436391393, -2.7958371576085757, 0.00487400333077294},
    {2.636892409950654, -0.3457554959812175, 0.00487400333077294},
    {2.636892409950654, 2.7958371576085757, 0.00487400333077294},
    {2.636892409950654, -2.7958371576085757, 0.00487400333077294},
    {0.5047002436391393, 1.225040830813679, 0.00487400333077294},
    {0.5047002436391393, 1.916551822776114, 0.00487400333077294},
    {0.5047002436391393, -1.225040830813679, 0.00487400333077294},
    {2.636892409950654, 1.225040830813679, 0.00487400333077294},
    {0.5047002436391393, -1.916551822776114, 0.00487400333077294},
    {2.636892409950654, -1.225040830813679, 0.00487400333077294},
    {2.636892409950654, 1.916551822776114, 0.00487400333077294},
    {2.636892409950654, -1.916551822776114, 0.00487400333077294},
    {1.4061767296686374, 0.47930578647373345, 0.00487400333077294},
    {1.4061767296686374, 2.6622868671160598, 0.00487400333077294},
    {1.4061767296686374, -0.47930578647373345, 0.00487400333077294},
    {1.735415923921156, 0.47930578647373345, 0.00487400333077294},
    {1.4061767296686374, -2.6622868671160598, 0.00487400333077294},
    {1.735415923921156, -0.47930578647373345, 0.00487400333077294},
    {1.735415923921156, 2.6622868671160598, 0.00487400333077294},
    {1.735415923921156, -2.6622868671160598, 0.00487400333077294},
    {1.09850415010464, 0.18507719575879122, 0.00487400333077294},
    {1.09850415010464, 2.956515457831002, 0.00487400333077294},
    {1.09850415010464, -0.18507719575879122, 0.00487400333077294},
    {2.043088503485153, 0.18507719575879122, 0.00487400333077294},
    {1.09850415010464, -2.956515457831002, 0.00487400333077294},
    {2.043088503485153, -0.18507719575879122, 0.00487400333077294},
    {2.043088503485153, 2.956515457831002, 0.00487400333077294},
    {2.043088503485153, -2.956515457831002, 0.00487400333077294},
    {1.4061767296686374, 1.0914905403211632, 0.00487400333077294},
    {1.4061767296686374, 2.05010211326863, 0.00487400333077294},
    {1.4061767296686374, -1.0914905403211632, 0.00487400333077294},
    {1.735415923921156, 1.0914905403211632, 0.00487400333077294},
    {1.4061767296686374, -2.05010211326863, 0.00487400333077294},
    {1.735415923921156, -1.0914905403211632, 0.00487400333077294},
    {1.735415923921156, 2.05010211326863, 0.00487400333077294},
    {1.735415923921156, -2.05010211326863, 0.00487400333077294},
    {1.09850415010464, 1.3857191310361054, 0.00487400333077294},
    {1.09850415010464, 1.755873522553688, 0.00487400333077294},
    {1.09850415010464, -1.3857191310361054, 0.00487400333077294},
    {2.043088503485153, 1.3857191310361054, 0.00487400333077294},
    {1.09850415010464, -1.755873522553688, 0.00487400333077294},
    {2.043088503485153, -1.3857191310361054, 0.00487400333077294},
    {2.043088503485153, 1.755873522553688, 0.00487400333077294},
    {2.043088503485153, -1.755873522553688, 0.00487400333077294},
    {0.5716575509070411, 0.39180814082996196, 0.004975108147203857},
    {0.5716575509070411, 2.749784512759831, 0.004975108147203857},
    {0.5716575509070411, -0.39180814082996196, 0.004975108147203857},
    {2.569935102682752, 0.39180814082996196, 0.004975108147203857},
    {0.5716575509070411, -2.749784512759831, 0.004975108147203857},
    {2.569935102682752, -0.39180814082996196, 0.004975108147203857},
    {2.569935102682752, 2.749784512759831, 0.004975108147203857},
    {2.569935102682752, -2.749784512759831, 0.004975108147203857},
    {0.5716575509070411, 1.1789881859649347, 0.004975108147203857},
    {0.5716575509070411, 1.9626044676248586, 0.004975108147203857},
    {0.5716575509070411, -1.1789881859649347, 0.004975108147203857},
    {2.569935102682752, 1.1789881859649347, 0.004975108147203857},
    {0.5716575509070411, -1.9626044676248586, 0.004975108147203857},
    {2.569935102682752, -1.1789881859649347, 0.004975108147203857},
    {2.569935102682752, 1.9626044676248586, 0.004975108147203857},
    {2.569935102682752, -1.9626044676248586, 0.004975108147203857},
    {1.3627011162541958, 0.5364096435017619, 0.004975108147203857},
    {1.3627011162541958, 2.605183010088031, 0.004975108147203857},
    {1.3627011162541958, -0.5364096435017619, 0.004975108147203857},
    {1.7788915373355974, 0.5364096435017619, 0.004975108147203857},
    {1.3627011162541958, -2.605183010088031, 0.004975108147203857},
    {1.7788915373355974, -0.5364096435017619, 0.004975108147203857},
    {1.7788915373355974, 2.605183010088031, 0.004975108147203857},
    {1.7788915373355974, -2.605183010088031, 0.004975108147203857},
    {1.0471653909918501, 0.2408844277594203, 0.004975108147203857},
    {1.0471653909918501, 2.900708225830373, 0.004975108147203857},
    {1.0471653909918501, -0.2408844277594203, 0.004975108147203857},
    {2.094427262597943, 0.2408844277594203, 0.004975108147203857},
    {1.0471653909918501, -2.900708225830373, 0.004975108147203857},
    {2.094427262597943, -0.2408844277594203, 0.004975108147203857},
    {2.094427262597943, 2.900708225830373, 0.004975108147203857},
    {2.094427262597943, -2.900708225830373, 0.004975108147203857},
    {1.3627011162541958, 1.0343866832931348, 0.004975108147203857},
    {1.3627011162541958, 2.1072059702966586, 0.004975108147203857},
    {1.3627011162541958, -1.0343866832931348, 0.004975108147203857},
    {1.7788915373355974, 1.0343866832931348, 0.004975108147203857},
    {1.3627011162541958, -2.1072059702966586, 0.004975108147203857},
    {1.7788915373355974, -1.0343866832931348, 0.004975108147203857},
    {1.7788915373355974, 2.1072059702966586, 0.004975108147203857},
    {1.7788915373355974, -2.1072059702966586, 0.004975108147203857},
    {1.0471653909918501, 1.3299118990354764, 0.004975108147203857},
    {1.0471653909918501, 1.811680754554317, 0.004975108147203857},
    {1.0471653909918501, -1.3299118990354764, 0.004975108147203857},
    {2.094427262597943, 1.3299118990354764, 0.004975108147203857},
    {1.0471653909918501, -1.811680754554317, 0.004975108147203857},
    {2.094427262597943, -1.3299118990354764, 0.004975108147203857},
    {2.094427262597943, 1.811680754554317, 0.004975108147203857},
    {2.094427262597943, -1.811680754554317, 0.004975108147203857},
    {0.6401630331909618, 0.42988173223848514, 0.005045758425668453},
    {0.6401630331909618, 2.711710921351308, 0.005045758425668453},
    {0.6401630331909618, -0.42988173223848514, 0.005045758425668453},
    {2.5014296203988313, 0.42988173223848514, 0.005045758425668453},
    {0.6401630331909618, -2.711710921351308, 0.005045758425668453},
    {2.5014296203988313, -0.42988173223848514, 0.005045758425668453},
    {2.5014296203988313, 2.711710921351308, 0.005045758425668453},
    {2.5014296203988313, -2.711710921351308, 0.005045758425668453},
    {0.6401630331909618, 1.1409145945564114, 0.005045758425668453},
    {0.6401630331909618, 2.0006780590333815, 0.005045758425668453},
    {0.6401630331909618, -1.1409145945564114, 0.005045758425668453},
    {2.5014296203988313, 1.1409145945564114, 0.005045758425668453},
    {0.6401630331909618, -2.0006780590333815, 0.005045758425668453},
    {2.5014296203988313, -1.1409145945564114, 0.005045758425668453},
    {2.5014296203988313, 2.0006780590333815, 0.005045758425668453},
    {2.5014296203988313, -2.0006780590333815, 0.005045758425668453},
    {1.3192069243468796, 0.5951442593426457, 0.005045758425668453},
    {1.3192069243468796, 2.5464483942471476, 0.005045758425668453},
    {1.3192069243468796, -0.5951442593426457, 0.005045758425668453},
    {1.8223857292429138, 0.5951442593426457, 0.005045758425668453},
    {1.3192069243468796, -2.5464483942471476, 0.005045758425668453},
    {1.8223857292429138, -0.5951442593426457, 0.005045758425668453},
    {1.8223857292429138, 2.5464483942471476, 0.005045758425668453},
    {1.8223857292429138, -2.5464483942471476, 0.005045758425668453},
    {0.9968163592903503, 0.3009743567864485, 0.005045758425668453},
    {0.9968163592903503, 2.8406182968033447, 0.005045758425668453},
    {0.9968163592903503, -0.3009743567864485, 0.005045758425668453},
    {2.144776294299443, 0.3009743567864485, 0.005045758425668453},
    {0.9968163592903503, -2.8406182968033447, 0.005045758425668453},
    {2.144776294299443, -0.3009743567864485, 0.005045758425668453},
    {2.144776294299443, 2.8406182968033447, 0.005045758425668453},
    {2.144776294299443, -2.8406182968033447, 0.005045758425668453},
    {1.3192069243468796, 0.975652067452251, 0.005045758425668453},
    {1.3192069243468796, 2.1659405861375425, 0.005045758425668453},
    {1.3192069243468796, -0.975652067452251, 0.005045758425668453},
    {1.8223857292429138, 0.975652067452251, 0.005045758425668453},
    {1.3192069243468796, -2.1659405861375425, 0.005045758425668453},
    {1.8223857292429138, -0.975652067452251, 0.005045758425668453},
    {1.8223857292429138, 2.1659405861375425, 0.005045758425668453},
    {1.8223857292429138, -2.1659405861375425, 0.005045758425668453},
    {0.9968163592903503, 1.269821970008448, 0.005045758425668453},
    {0.9968163592903503, 1.871770683581345, 0.005045758425668453},
    {0.9968163592903503, -1.269821970008448, 0.005045758425668453},
    {2.144776294299443, 1.269821970008448, 0.005045758425668453},
    {0.9968163592903503, -1.871770683581345, 0.005045758425668453},
    {2.144776294299443, -1.269821970008448, 0.005045758425668453},
    {2.144776294299443, 1.871770683581345, 0.005045758425668453},
    {2.144776294299443, -1.871770683581345, 0.005045758425668453},
    {0.710074813392625, 0.46184218664001864, 0.005090469333743237},
    {0.710074813392625, 2.6797504669497747, 0.005090469333743237},
    {0.710074813392625, -0.46184218664001864, 0.005090469333743237},
    {2.431517840197168, 0.46184218664001864, 0.005090469333743237},
    {0.710074813392625, -2.6797504669497747, 0.005090469333743237},
    {2.431517840197168, -0.46184218664001864, 0.005090469333743237},
    {2.431517840197168, 2.6797504669497747, 0.005090469333743237},
    {2.431517840197168, -2.6797504669497747, 0.005090469333743237},
    {0.710074813392625, 1.108954140154878, 0.005090469333743237},
    {0.710074813392625, 2.0326385134349154, 0.005090469333743237},
    {0.710074813392625, -1.108954140154878, 0.005090469333743237},
    {2.431517840197168, 1.108954140154878, 0.005090469333743237},
    {0.710074813392625, -2.0326385134349154, 0.005090469333743237},
    {2.431517840197168, -1.108954140154878, 0.005090469333743237},
    {2.431517840197168, 2.0326385134349154, 0.005090469333743237},
    {2.431517840197168, -2.0326385134349154, 0.005090469333743237},
    {1.276066709346465, 0.6559244221830571, 0.005090469333743237},
    {1.276066709346465, 2.485668231406736, 0.005090469333743237},
    {1.276066709346465, -0.6559244221830571, 0.005090469333743237},
    {1.8655259442433283, 0.6559244221830571, 0.005090469333743237},
    {1.276066709346465, -2.485668231406736, 0.005090469333743237},
    {1.8655259442433283, -0.6559244221830571, 0.005090469333743237},
    {1.8655259442433283, 2.485668231406736, 0.005090469333743237},
    {1.8655259442433283, -2.485668231406736, 0.005090469333743237},
    {0.9476487967674487, 0.3658201550906544, 0.005090469333743237},
    {0.9476487967674487, 2.7757724984991388, 0.005090469333743237},
    {0.9476487967674487, -0.3658201550906544, 0.005090469333743237},
    {2.1939438568223446, 0.3658201550906544, 0.005090469333743237},
    {0.9476487967674487, -2.7757724984991388, 0.005090469333743237},
    {2.1939438568223446, -0.3658201550906544, 0.005090469333743237},
    {2.1939438568223446, 2.7757724984991388, 0.005090469333743237},
    {2.1939438568223446, -2.7757724984991388, 0.005090469333743237},
    {1.276066709346465, 0.9148719046118395, 0.005090469333743237},
    {1.276066709346465, 2.2267207489779537, 0.005090469333743237},
    {1.276066709346465, -0.9148719046118395, 0.005090469333743237},
    {1.8655259442433283, 0.9148719046118395, 0.005090469333743237},
    {1.276066709346465, -2.2267207489779537, 0.005090469333743237},
    {1.8655259442433283, -0.9148719046118395, 0.005090469333743237},
    {1.8655259442433283, 2.2267207489779537, 0.005090469333743237},
    {1.8655259442433283, -2.2267207489779537, 0.005090469333743237},
    {0.9476487967674487, 1.2049761717042422, 0.005090469333743237},
    {0.9476487967674487, 1.936616481885551, 0.005090469333743237},
    {0.9476487967674487, -1.2049761717042422, 0.005090469333743237},
    {2.1939438568223446, 1.2049761717042422, 0.005090469333743237},
    {0.9476487967674487, -1.936616481885551, 0.005090469333743237},
    {2.1939438568223446, -1.2049761717042422, 0.005090469333743237},
    {2.1939438568223446, 1.936616481885551, 0.005090469333743237},
    {2.1939438568223446, -1.936616481885551, 0.005090469333743237},
    {0.7813176879718886, 0.4889897625645106, 0.005113658559385499},
    {0.7813176879718886, 2.652602891025283, 0.005113658559385499},
    {0.7813176879718886, -0.4889897625645106, 0.005113658559385499},
    {2.3602749656179047, 0.4889897625645106, 0.005113658559385499},
    {0.7813176879718886, -2.652602891025283, 0.005113658559385499},
    {2.3602749656179047, -0.4889897625645106, 0.005113658559385499},
    {2.3602749656179047, 2.652602891025283, 0.005113658559385499},
    {2.3602749656179047, -2.652602891025283, 0.005113658559385499},
    {0.7813176879718886, 1.081806564230386, 0.005113658559385499},
    {0.7813176879718886, 2.0597860893594073, 0.005113658559385499},
    {0.7813176879718886, -1.081806564230386, 0.005113658559385499},
    {2.3602749656179047, 1.081806564230386, 0.005113658559385499},
    {0.7813176879718886, -2.0597860893594073, 0.005113658559385499},
    {2.3602749656179047, -1.081806564230386, 0.005113658559385499},
    {2.3602749656179047, 2.0597860893594073, 0.005113658559385499},
    {2.3602749656179047, -2.0597860893594073, 0.005113658559385499},
    {1.2336513017135722, 0.7191881398252714, 0.005113658559385499},
    {1.2336513017135722, 2.422404513764522, 0.005113658559385499},
    {1.2336513017135722, -0.7191881398252714, 0.005113658559385499},
    {1.9079413518762212, 0.7191881398252714, 0.005113658559385499},
    {1.2336513017135722, -2.422404513764522, 0.005113658559385499},
    {1.9079413518762212, -0.7191881398252714, 0.005113658559385499},
    {1.9079413518762212, 2.422404513764522, 0.005113658559385499},
    {1.9079413518762212, -2.422404513764522, 0.005113658559385499},
    {0.8999016118536703, 0.4360108564557111, 0.005113658559385499},
    {0.8999016118536703, 2.7055817971340823, 0.005113658559385499},
    {0.8999016118536703, -0.4360108564557111, 0.005113658559385499},
    {2.241691041736123, 0.4360108564557111, 0.005113658559385499},
    {0.8999016118536703, -2.7055817971340823, 0.005113658559385499},
    {2.241691041736123, -0.4360108564557111, 0.005113658559385499},
    {2.241691041736123, 2.7055817971340823, 0.005113658559385499},
    {2.241691041736123, -2.7055817971340823, 0.005113658559385499},
    {1.2336513017135722, 0.8516081869696253, 0.005113658559385499},
    {1.2336513017135722, 2.289984466620168, 0.005113658559385499},
    {1.2336513017135722, -0.8516081869696253, 0.005113658559385499},
    {1.9079413518762212, 0.8516081869696253, 0.005113658559385499},
    {1.2336513017135722, -2.289984466620168, 0.005113658559385499},
    {1.9079413518762212, -0.8516081869696253, 0.005113658559385499},
    {1.9079413518762212, 2.289984466620168, 0.005113658559385499},
    {1.9079413518762212, -2.289984466620168, 0.005113658559385499},
    {0.8999016118536703, 1.1347854703391855, 0.005113658559385499},
    {0.8999016118536703, 2.006807183250608, 0.005113658559385499},
    {0.8999016118536703, -1.1347854703391855, 0.005113658559385499},
    {2.241691041736123, 1.1347854703391855, 0.005113658559385499},
    {0.8999016118536703, -2.006807183250608, 0.005113658559385499},
    {2.241691041736123, -1.1347854703391855, 0.005113658559385499},
    {2.241691041736123, 2.006807183250608, 0.005113658559385499},
    {2.241691041736123, -2.006807183250608, 0.005113658559385499},
    {0.4302476462685989, 0.09761043494420017, 0.004725107358923419},
    {0.4302476462685989, 3.043982218645593, 0.004725107358923419},
    {0.4302476462685989, -0.09761043494420017, 0.004725107358923419},
    {2.7113450073211944, 0.09761043494420017, 0.004725107358923419},
    {0.4302476462685989, -3.043982218645593, 0.004725107358923419},
    {2.7113450073211944, -0.09761043494420017, 0.004725107358923419},
    {2.7113450073211944, 3.043982218645593, 0.004725107358923419},
    {2.7113450073211944, -3.043982218645593, 0.004725107358923419},
    {0.4302476462685989, 1.4731858918506964, 0.004725107358923419},
    {0.4302476462685989, 1.6684067617390967, 0.004725107358923419},
    {0.4302476462685989, -1.4731858918506964, 0.004725107358923419},
    {2.7113450073211944, 1.4731858918506964, 0.004725107358923419},
    {0.4302476462685989, -1.6684067617390967, 0.004725107358923419},
    {2.7113450073211944, -1.4731858918506964, 0.004725107358923419},
    {2.7113450073211944, 1.6684067617390967, 0.004725107358923419},
    {2.7113450073211944, -1.6684067617390967, 0.004725107358923419},
    {1.530136833252431, 0.4284416740645779, 0.004725107358923419},
    {1.530136833252431, 2.7131509795252153, 0.004725107358923419},
    {1.530136833252431, -0.4284416740645779, 0.004725107358923419},
    {1.6114558203373621, 0.4284416740645779, 0.004725107358923419},
    {1.530136833252431, -2.7131509795252153, 0.004725107358923419},
    {1.6114558203373621, -0.4284416740645779, 0.004725107358923419},
    {1.6114558203373621, 2.7131509795252153, 0.004725107358923419},
    {1.6114558203373621, -2.7131509795252153, 0.004725107358923419},
    {1.142732105124372, 0.04469457382496191, 0.004725107358923419},
    {1.142732105124372, 3.096898079764831, 0.004725107358923419},
    {1.142732105124372, -0.04469457382496191, 0.004725107358923419},
    {1.9988605484654212, 0.04469457382496191, 0.004725107358923419},
    {1.142732105124372, -3.096898079764831, 0.004725107358923419},
    {1.9988605484654212, -0.04469457382496191, 0.004725107358923419},
    {1.9988605484654212, 3.096898079764831, 0.004725107358923419},
    {1.9988605484654212, -3.096898079764831, 0.004725107358923419},
    {1.530136833252431, 1.1423546527303188, 0.004725107358923419},
    {1.530136833252431, 1.9992380008594746, 0.004725107358923419},
    {1.530136833252431, -1.1423546527303188, 0.004725107358923419},
    {1.6114558203373621, 1.1423546527303188, 0.004725107358923419},
    {1.530136833252431, -1.9992380008594746, 0.004725107358923419},
    {1.6114558203373621, -1.1423546527303188, 0.004725107358923419},
    {1.6114558203373621, 1.9992380008594746, 0.004725107358923419},
    {1.6114558203373621, -1.9992380008594746, 0.004725107358923419},
    {1.142732105124372, 1.5261017529699348, 0.004725107358923419},
    {1.142732105124372, 1.6154909006198586, 0.004725107358923419},
    {1.142732105124372, -1.5261017529699348, 0.004725107358923419},
    {1.9988605484654212, 1.5261017529699348, 0.004725107358923419},
    {1.142732105124372, -1.6154909006198586, 0.004725107358923419},
    {1.9988605484654212, -1.5261017529699348, 0.004725107358923419},
    {1.9988605484654212, 1.6154909006198586, 0.004725107358923419},
    {1.9988605484654212, -1.6154909006198586, 0.004725107358923419},
    {0.49184988698020937, 0.17577504784182166, 0.004864403818338189},
    {0.49184988698020937, 2.9658176057479717, 0.004864403818338189},
    {0.49184988698020937, -0.17577504784182166, 0.004864403818338189},
    {2.6497427666095836, 0.17577504784182166, 0.004864403818338189},
    {0.49184988698020937, -2.9658176057479717, 0.004864403818338189},
    {2.6497427666095836, -0.17577504784182166, 0.004864403818338189},
    {2.6497427666095836, 2.9658176057479717, 0.004864403818338189},
    {2.6497427666095836, -2.9658176057479717, 0.004864403818338189},
    {0.49184988698020937, 1.395021278953075, 0.004864403818338189},
    {0.49184988698020937, 1.7465713746367182, 0.004864403818338189},
    {0.49184988698020937, -1.395021278953075, 0.004864403818338189},
    {2.6497427666095836, 1.395021278953075, 0.004864403818338189},
    {0.49184988698020937, -1.7465713746367182, 0.004864403818338189},
    {2.6497427666095836, -1.395021278953075, 0.004864403818338189},
    {2.6497427666095836, 1.7465713746367182, 0.004864403818338189},
    {2.6497427666095836, -1.7465713746367182, 0.004864403818338189},
    {1.4881179191159937, 0.4854135811013515, 0.004864403818338189},
    {1.4881179191159937, 2.6561790724884418, 0.004864403818338189},
    {1.4881179191159937, -0.4854135811013515, 0.004864403818338189},
    {1.6534747344737994, 0.4854135811013515, 0.004864403818338189},
    {1.4881179191159937, -2.6561790724884418, 0.004864403818338189},
    {1.6534747344737994, -0.4854135811013515, 0.004864403818338189},
    {1.6534747344737994, 2.6561790724884418, 0.004864403818338189},
    {1.6534747344737994, -2.6561790724884418, 0.004864403818338189},
    {1.0871838235054871, 0.09341751534276535, 0.004864403818338189},
    {1.0871838235054871, 3.0481751382470277, 0.004864403818338189},
    {1.0871838235054871, -0.09341751534276535, 0.004864403818338189},
    {2.054408830084306, 0.09341751534276535, 0.004864403818338189},
    {1.0871838235054871, -3.0481751382470277, 0.004864403818338189},
    {2.054408830084306, -0.09341751534276535, 0.004864403818338189},
    {2.054408830084306, 3.0481751382470277, 0.004864403818338189},
    {2.054408830084306, -3.0481751382470277, 0.004864403818338189},
    {1.4881179191159937, 1.0853827456935452, 0.004864403818338189},
    {1.4881179191159937, 2.056209907896248, 0.004864403818338189},
    {1.4881179191159937, -1.0853827456935452, 0.004864403818338189},
    {1.6534747344737994, 1.0853827456935452, 0.004864403818338189},
    {1.4881179191159937, -2.056209907896248, 0.004864403818338189},
    {1.6534747344737994, -1.0853827456935452, 0.004864403818338189},
    {1.6534747344737994, 2.056209907896248, 0.004864403818338189},
    {1.6534747344737994, -2.056209907896248, 0.004864403818338189},
    {1.0871838235054871, 1.4773788114521313, 0.004864403818338189},
    {1.0871838235054871, 1.664213842137662, 0.004864403818338189},
    {1.0871838235054871, -1.4773788114521313, 0.004864403818338189},
    {2.054408830084306, 1.4773788114521313, 0.004864403818338189},
    {1.0871838235054871, -1.664213842137662, 0.004864403818338189},
    {2.054408830084306, -1.4773788114521313, 0.004864403818338189},
    {2.054408830084306, 1.664213842137662, 0.004864403818338189},
    {2.054408830084306, -1.664213842137662, 0.004864403818338189},
    {0.5556996659783333, 0.2395844838340007, 0.004970361226230077},
    {0.5556996659783333, 2.9020081697557925, 0.004970361226230077},
    {0.5556996659783333, -0.2395844838340007, 0.004970361226230077},
    {2.58589298761146, 0.2395844838340007, 0.004970361226230077},
    {0.5556996659783333, -2.9020081697557925, 0.004970361226230077},
    {2.58589298761146, -0.2395844838340007, 0.004970361226230077},
    {2.58589298761146, 2.9020081697557925, 0.004970361226230077},
    {2.58589298761146, -2.9020081697557925, 0.004970361226230077},
    {0.5556996659783333, 1.331211842960896, 0.004970361226230077},
    {0.5556996659783333, 1.8103808106288972, 0.004970361226230077},
    {0.5556996659783333, -1.331211842960896, 0.004970361226230077},
    {2.58589298761146, 1.331211842960896, 0.004970361226230077},
    {0.5556996659783333, -1.8103808106288972, 0.004970361226230077},
    {2.58589298761146, -1.331211842960896, 0.004970361226230077},
    {2.58589298761146, 1.8103808106288972, 0.004970361226230077},
    {2.58589298761146, -1.8103808106288972, 0.004970361226230077},
    {1.445282841132658, 0.5427968642564487, 0.004970361226230077},
    {1.445282841132658, 2.5987957893333444, 0.004970361226230077},
    {1.445282841132658, -0.5427968642564487, 0.004970361226230077},
    {1.6963098124571352, 0.5427968642564487, 0.004970361226230077},
    {1.445282841132658, -2.5987957893333444, 0.004970361226230077},
    {1.6963098124571352, -0.5427968642564487, 0.004970361226230077},
    {1.6963098124571352, 2.5987957893333444, 0.004970361226230077},
    {1.6963098124571352, -2.5987957893333444, 0.004970361226230077},
    {1.032738067384912, 0.1463038514979565, 0.004970361226230077},
    {1.032738067384912, 2.995288802091837, 0.004970361226230077},
    {1.032738067384912, -0.1463038514979565, 0.004970361226230077},
    {2.108854586204881, 0.1463038514979565, 0.004970361226230077},
    {1.032738067384912, -2.995288802091837, 0.004970361226230077},
    {2.108854586204881, -0.1463038514979565, 0.004970361226230077},
    {2.108854586204881, 2.995288802091837, 0.004970361226230077},
    {2.108854586204881, -2.995288802091837, 0.004970361226230077},
    {1.445282841132658, 1.0279994625384479, 0.004970361226230077},
    {1.445282841132658, 2.1135931910513452, 0.004970361226230077},
    {1.445282841132658, -1.0279994625384479, 0.004970361226230077},
    {1.6963098124571352, 1.0279994625384479, 0.004970361226230077},
    {1.445282841132658, -2.1135931910513452, 0.004970361226230077},
    {1.6963098124571352, -1.0279994625384479, 0.004970361226230077},
    {1.6963098124571352, 2.1135931910513452, 0.004970361226230077},
    {1.6963098124571352, -2.1135931910513452, 0.004970361226230077},
    {1.032738067384912, 1.4244924752969401, 0.004970361226230077},
    {1.032738067384912, 1.7171001782928532, 0.004970361226230077},
    {1.032738067384912, -1.4244924752969401, 0.004970361226230077},
    {2.108854586204881, 1.4244924752969401, 0.004970361226230077},
    {1.032738067384912, -1.7171001782928532, 0.004970361226230077},
    {2.108854586204881, -1.4244924752969401, 0.004970361226230077},
    {2.108854586204881, 1.7171001782928532, 0.004970361226230077},
    {2.108854586204881, -1.7171001782928532, 0.004970361226230077},
    {0.6214438030006557, 0.2925580917508712, 0.0050458525928210925},
    {0.6214438030006557, 2.849034561838922, 0.0050458525928210925},
    {0.6214438030006557, -0.2925580917508712, 0.0050458525928210925},
    {2.5201488505891376, 0.2925580917508712, 0.0050458525928210925},
    {0.6214438030006557, -2.849034561838922, 0.0050458525928210925},
    {2.5201488505891376, -0.2925580917508712, 0.0050458525928210925},
    {2.5201488505891376, 2.849034561838922, 0.0050458525928210925},
    {2.5201488505891376, -2.849034561838922, 0.0050458525928210925},
    {0.6214438030006557, 1.2782382350440253, 0.0050458525928210925},
    {0.6214438030006557, 1.8633544185457678, 0.0050458525928210925},
    {0.6214438030006557, -1.2782382350440253, 0.0050458525928210925},
    {2.5201488505891376, 1.2782382350440253, 0.0050458525928210925},
    {0.6214438030006557, -1.8633544185457678, 0.0050458525928210925},
    {2.5201488505891376, -1.2782382350440253, 0.0050458525928210925},
    {2.5201488505891376, 1.8633544185457678, 0.0050458525928210925},
    {2.5201488505891376, -1.8633544185457678, 0.0050458525928210925},
    {1.4020863812728839, 0.6010393305561159, 0.0050458525928210925},
    {1.4020863812728839, 2.540553323033677, 0.0050458525928210925},
    {1.4020863812728839, -0.6010393305561159, 0.0050458525928210925},
    {1.7395062723169095, 0.6010393305561159, 0.0050458525928210925},
    {1.4020863812728839, -2.540553323033677, 0.0050458525928210925},
    {1.7395062723169095, -0.6010393305561159, 0.0050458525928210925},
    {1.7395062723169095, 2.540553323033677, 0.0050458525928210925},
    {1.7395062723169095, -2.540553323033677, 0.0050458525928210925},
    {0.9794597880621733, 0.2036592131983929, 0.0050458525928210925},
    {0.9794597880621733, 2.9379334403914004, 0.0050458525928210925},
    {0.9794597880621733, -0.2036592131983929, 0.0050458525928210925},
    {2.16213286552762, 0.2036592131983929, 0.0050458525928210925},
    {0.9794597880621733, -2.9379334403914004, 0.0050458525928210925},
    {2.16213286552762, -0.2036592131983929, 0.0050458525928210925},
    {2.16213286552762, 2.9379334403914004, 0.0050458525928210925},
    {2.16213286552762, -2.9379334403914004, 0.0050458525928210925},
    {1.4020863812728839, 0.9697569962387806, 0.0050458525928210925},
    {1.4020863812728839, 2.1718356573510125, 0.0050458525928210925},
    {1.4020863812728839, -0.9697569962387806, 0.0050458525928210925},
    {1.7395062723169095, 0.9697569962387806, 0.0050458525928210925},
    {1.4020863812728839, -2.1718356573510125, 0.0050458525928210925},
    {1.7395062723169095, -0.9697569962387806, 0.0050458525928210925},
    {1.7395062723169095, 2.1718356573510125, 0.0050458525928210925},
    {1.7395062723169095, -2.1718356573510125, 0.0050458525928210925},
    {0.9794597880621733, 1.3671371135965038, 0.0050458525928210925},
    {0.9794597880621733, 1.7744555399932895, 0.0050458525928210925},
    {0.9794597880621733, -1.3671371135965038, 0.0050458525928210925},
    {2.16213286552762, 1.3671371135965038, 0.0050458525928210925},
    {0.9794597880621733, -1.7744555399932895, 0.0050458525928210925},
    {2.16213286552762, -1.3671371135965038, 0.0050458525928210925},
    {2.16213286552762, 1.7744555399932895, 0.0050458525928210925},
    {2.16213286552762, -1.7744555399932895, 0.0050458525928210925},
    {0.6888488650822127, 0.3371642323692523, 0.005094201798531486},
    {0.6888488650822127, 2.804428421220541, 0.005094201798531486},
    {0.6888488650822127, -0.3371642323692523, 0.005094201798531486},
    {2.452743788507581, 0.3371642323692523, 0.005094201798531486},
    {0.6888488650822127, -2.804428421220541, 0.005094201798531486},
    {2.452743788507581, -0.3371642323692523, 0.005094201798531486},
    {2.452743788507581, 2.804428421220541, 0.005094201798531486},
    {2.452743788507581, -2.804428421220541, 0.005094201798531486},
    {0.6888488650822127, 1.2336320944256443, 0.005094201798531486},
    {0.6888488650822127, 1.9079605591641489, 0.005094201798531486},
    {0.6888488650822127, -1.2336320944256443, 0.005094201798531486},
    {2.452743788507581, 1.2336320944256443, 0.005094201798531486},
    {0.6888488650822127, -1.9079605591641489, 0.005094201798531486},
    {2.452743788507581, -1.2336320944256443, 0.005094201798531486},
    {2.452743788507581, 1.9079605591641489, 0.005094201798531486},
    {2.452743788507581, -1.9079605591641489, 0.005094201798531486},
    {1.3589344549108555, 0.6605847325660077, 0.005094201798531486},
    {1.3589344549108555, 2.4810079210237856, 0.005094201798531486},
    {1.3589344549108555, -0.6605847325660077, 0.005094201798531486},
    {1.7826581986789376, 0.6605847325660077, 0.005094201798531486},
    {1.3589344549108555, -2.4810079210237856, 0.005094201798531486},
    {1.7826581986789376, -0.6605847325660077, 0.005094201798531486},
    {1.7826581986789376, 2.4810079210237856, 0.005094201798531486},
    {1.7826581986789376, -2.4810079210237856, 0.005094201798531486},
    {0.9274705398149552, 0.26593972939762545, 0.005094201798531486},
    {0.9274705398149552, 2.875652924192168, 0.005094201798531486},
    {0.9274705398149552, -0.26593972939762545, 0.005094201798531486},
    {2.214122113774838, 0.26593972939762545, 0.005094201798531486},
    {0.9274705398149552, -2.875652924192168, 0.005094201798531486},
    {2.214122113774838, -0.26593972939762545, 0.005094201798531486},
    {2.214122113774838, 2.875652924192168, 0.005094201798531486},
    {2.214122113774838, -2.875652924192168, 0.005094201798531486},
    {1.3589344549108555, 0.9102115942288889, 0.005094201798531486},
    {1.3589344549108555, 2.2313810593609045, 0.005094201798531486},
    {1.3589344549108555, -0.9102115942288889, 0.005094201798531486},
    {1.7826581986789376, 0.9102115942288889, 0.005094201798531486},
    {1.3589344549108555, -2.2313810593609045, 0.005094201798531486},
    {1.7826581986789376, -0.9102115942288889, 0.005094201798531486},
    {1.7826581986789376, 2.2313810593609045, 0.005094201798531486},
    {1.7826581986789376, -2.2313810593609045, 0.005094201798531486},
    {0.9274705398149552, 1.3048565973972712, 0.005094201798531486},
    {0.9274705398149552, 1.8367360561925221, 0.005094201798531486},
    {0.9274705398149552, -1.3048565973972712, 0.005094201798531486},
    {2.214122113774838, 1.3048565973972712, 0.005094201798531486},
    {0.9274705398149552, -1.8367360561925221, 0.005094201798531486},
    {2.214122113774838, -1.3048565973972712, 0.005094201798531486},
    {2.214122113774838, 1.8367360561925221, 0.005094201798531486},
    {2.214122113774838, -1.8367360561925221, 0.005094201798531486},
    {0.7577695664907477, 0.37515885045972963, 0.005119009933542624},
    {0.7577695664907477, 2.7664338031300635, 0.005119009933542624},
    {0.7577695664907477, -0.37515885045972963, 0.005119009933542624},
    {2.383823087099046, 0.37515885045972963, 0.005119009933542624},
    {0.7577695664907477, -2.7664338031300635, 0.005119009933542624},
    {2.383823087099046, -0.37515885045972963, 0.005119009933542624},
    {2.383823087099046, 2.7664338031300635, 0.005119009933542624},
    {2.383823087099046, -2.7664338031300635, 0.005119009933542624},
    {0.7577695664907477, 1.195637476335167, 0.005119009933542624},
    {0.7577695664907477, 1.9459551772546262, 0.005119009933542624},
    {0.7577695664907477, -1.195637476335167, 0.005119009933542624},
    {2.383823087099046, 1.195637476335167, 0.005119009933542624},
    {0.7577695664907477, -1.9459551772546262, 0.005119009933542624},
    {2.383823087099046, -1.195637476335167, 0.005119009933542624},
    {2.383823087099046, 1.9459551772546262, 0.005119009933542624},
    {2.383823087099046, -1.9459551772546262, 0.005119009933542624},
    {1.316213391214244, 0.7218832301146505, 0.005119009933542624},
    {1.316213391214244, 2.4197094234751426, 0.005119009933542624},
    {1.316213391214244, -0.7218832301146505, 0.005119009933542624},
    {1.8253792623755491, 0.7218832301146505, 0.005119009933542624},
    {1.316213391214244, -2.4197094234751426, 0.005119009933542624},
    {1.8253792623755491, -0.7218832301146505, 0.005119009933542624},
    {1.8253792623755491, 2.4197094234751426, 0.005119009933542624},
    {1.8253792623755491, -2.4197094234751426, 0.005119009933542624},
    {0.8769476791306353, 0.3337430586426773, 0.005119009933542624},
    {0.8769476791306353, 2.807849594947116, 0.005119009933542624},
    {0.8769476791306353, -0.3337430586426773, 0.005119009933542624},
    {2.264644974459158, 0.3337430586426773, 0.005119009933542624},
    {0.8769476791306353, -2.807849594947116, 0.005119009933542624},
    {2.264644974459158, -0.3337430586426773, 0.005119009933542624},
    {2.264644974459158, 2.807849594947116, 0.005119009933542624},
    {2.264644974459158, -2.807849594947116, 0.005119009933542624},
    {1.316213391214244, 0.8489130966802461, 0.005119009933542624},
    {1.316213391214244, 2.292679556909547, 0.005119009933542624},
    {1.316213391214244, -0.8489130966802461, 0.005119009933542624},
    {1.8253792623755491, 0.8489130966802461, 0.005119009933542624},
    {1.316213391214244, -2.292679556909547, 0.005119009933542624},
    {1.8253792623755491, -0.8489130966802461, 0.005119009933542624},
    {1.8253792623755491, 2.292679556909547, 0.005119009933542624},
    {1.8253792623755491, -2.292679556909547, 0.005119009933542624},
    {0.8769476791306353, 1.2370532681522193, 0.005119009933542624},
    {0.8769476791306353, 1.9045393854375738, 0.005119009933542624},
    {0.8769476791306353, -1.2370532681522193, 0.005119009933542624},
    {2.264644974459158, 1.2370532681522193, 0.005119009933542624},
    {0.8769476791306353, -1.9045393854375738, 0.005119009933542624},
    {2.264644974459158, -1.2370532681522193, 0.005119009933542624},
    {2.264644974459158, 1.9045393854375738, 0.005119009933542624},
    {2.264644974459158, -1.9045393854375738, 0.005119009933542624},
    {0.5474811549360917, 0.08066408368451317, 0.004969532585548438},
    {0.5474811549360917, 3.06092856990528, 0.004969532585548438},
    {0.5474811549360917, -0.08066408368451317, 0.004969532585548438},
    {2.5941114986537013, 0.08066408368451317, 0.004969532585548438},
    {0.5474811549360917, -3.06092856990528, 0.004969532585548438},
    {2.5941114986537013, -0.08066408368451317, 0.004969532585548438},
    {2.5941114986537013, 3.06092856990528, 0.004969532585548438},
    {2.5941114986537013, -3.06092856990528, 0.004969532585548438},
    {0.5474811549360917, 1.4901322431103834, 0.004969532585548438},
    {0.5474811549360917, 1.6514604104794097, 0.004969532585548438},
    {0.5474811549360917, -1.4901322431103834, 0.004969532585548438},
    {2.5941114986537013, 1.4901322431103834, 0.004969532585548438},
    {0.5474811549360917, -1.6514604104794097, 0.004969532585548438},
    {2.5941114986537013, -1.4901322431103834, 0.004969532585548438},
    {2.5941114986537013, 1.6514604104794097, 0.004969532585548438},
    {2.5941114986537013, -1.6514604104794097, 0.004969532585548438},
    {1.528840802303289, 0.5460346973828503, 0.004969532585548438},
    {1.528840802303289, 2.5955579562069433, 0.004969532585548438},
    {1.528840802303289, -0.5460346973828503, 0.004969532585548438},
    {1.6127518512865042, 0.5460346973828503, 0.004969532585548438},
    {1.528840802303289, -2.5955579562069433, 0.004969532585548438},
    {1.6127518512865042, -0.5460346973828503, 0.004969532585548438},
    {1.6127518512865042, 2.5955579562069433, 0.004969532585548438},
    {1.6127518512865042, -2.5955579562069433, 0.004969532585548438},
    {1.0252962880230694, 0.04908367767748435, 0.004969532585548438},
    {1.0252962880230694, 3.0925089759123088, 0.004969532585548438},
    {1.0252962880230694, -0.04908367767748435, 0.004969532585548438},
    {2.1162963655667237, 0.04908367767748435, 0.004969532585548438},
    {1.0252962880230694, -3.0925089759123088, 0.004969532585548438},
    {2.1162963655667237, -0.04908367767748435, 0.004969532585548438},
    {2.1162963655667237, 3.0925089759123088, 0.004969532585548438},
    {2.1162963655667237, -3.0925089759123088, 0.004969532585548438},
    {1.528840802303289, 1.0247616294120465, 0.004969532585548438},
    {1.528840802303289, 2.116831024177747, 0.004969532585548438},
    {1.528840802303289, -1.0247616294120465, 0.004969532585548438},
    {1.6127518512865042, 1.0247616294120465, 0.004969532585548438},
    {1.528840802303289, -2.116831024177747, 0.004969532585548438},
    {1.6127518512865042, -1.0247616294120465, 0.004969532585548438},
    {1.6127518512865042, 2.116831024177747, 0.004969532585548438},
    {1.6127518512865042, -2.116831024177747, 0.004969532585548438},
    {1.0252962880230694, 1.5217126491174122, 0.004969532585548438},
    {1.0252962880230694, 1.619880004472381, 0.004969532585548438},
    {1.0252962880230694, -1.5217126491174122, 0.004969532585548438},
    {2.1162963655667237, 1.5217126491174122, 0.004969532585548438},
    {1.0252962880230694, -1.619880004472381, 0.004969532585548438},
    {2.1162963655667237, -1.5217126491174122, 0.004969532585548438},
    {2.1162963655667237, 1.619880004472381, 0.004969532585548438},
    {2.1162963655667237, -1.619880004472381, 0.004969532585548438},
    {0.6097940859347952, 0.148222979327288, 0.005048722246129371},
    {0.6097940859347952, 2.9933696742625053, 0.005048722246129371},
    {0.6097940859347952, -0.148222979327288, 0.005048722246129371},
    {2.531798567654998, 0.148222979327288, 0.005048722246129371},
    {0.6097940859347952, -2.9933696742625053, 0.005048722246129371},
    {2.531798567654998, -0.148222979327288, 0.005048722246129371},
    {2.531798567654998, 2.9933696742625053, 0.005048722246129371},
    {2.531798567654998, -2.9933696742625053, 0.005048722246129371},
    {0.6097940859347952, 1.4225733474676086, 0.005048722246129371},
    {0.6097940859347952, 1.7190193061221846, 0.005048722246129371},
    {0.6097940859347952, -1.4225733474676086, 0.005048722246129371},
    {2.531798567654998, 1.4225733474676086, 0.005048722246129371},
    {0.6097940859347952, -1.7190193061221846, 0.005048722246129371},
    {2.531798567654998, -1.4225733474676086, 0.005048722246129371},
    {2.531798567654998, 1.7190193061221846, 0.005048722246129371},
    {2.531798567654998, -1.7190193061221846, 0.005048722246129371},
    {1.4861185530177499, 0.6046277495206895, 0.005048722246129371},
    {1.4861185530177499, 2.5369649040691034, 0.005048722246129371},
    {1.4861185530177499, -0.6046277495206895, 0.005048722246129371},
    {1.6554741005720433, 0.6046277495206895, 0.005048722246129371},
    {1.4861185530177499, -2.5369649040691034, 0.005048722246129371},
    {1.6554741005720433, -0.6046277495206895, 0.005048722246129371},
    {1.6554741005720433, 2.5369649040691034, 0.005048722246129371},
    {1.6554741005720433, -2.5369649040691034, 0.005048722246129371},
    {0.9686421620740647, 0.10280791429305258, 0.005048722246129371},
    {0.9686421620740647, 3.038784739296741, 0.005048722246129371},
    {0.9686421620740647, -0.10280791429305258, 0.005048722246129371},
    {2.1729504915157287, 0.10280791429305258, 0.005048722246129371},
    {0.9686421620740647, -3.038784739296741, 0.005048722246129371},
    {2.1729504915157287, -0.10280791429305258, 0.005048722246129371},
    {2.1729504915157287, 3.038784739296741, 0.005048722246129371},
    {2.1729504915157287, -3.038784739296741, 0.005048722246129371},
    {1.4861185530177499, 0.966168577274207, 0.005048722246129371},
    {1.4861185530177499, 2.1754240763155863, 0.005048722246129371},
    {1.4861185530177499, -0.966168577274207, 0.005048722246129371},
    {1.6554741005720433, 0.966168577274207, 0.005048722246129371},
    {1.4861185530177499, -2.1754240763155863, 0.005048722246129371},
    {1.6554741005720433, -0.966168577274207, 0.005048722246129371},
    {1.6554741005720433, 2.1754240763155863, 0.005048722246129371},
    {1.6554741005720433, -2.1754240763155863, 0.005048722246129371},
    {0.9686421620740647, 1.467988412501844, 0.005048722246129371},
    {0.9686421620740647, 1.6736042410879493, 0.005048722246129371},
    {0.9686421620740647, -1.467988412501844, 0.005048722246129371},
    {2.1729504915157287, 1.467988412501844, 0.005048722246129371},
    {0.9686421620740647, -1.6736042410879493, 0.005048722246129371},
    {2.1729504915157287, -1.467988412501844, 0.005048722246129371},
    {2.1729504915157287, 1.6736042410879493, 0.005048722246129371},
    {2.1729504915157287, -1.6736042410879493, 0.005048722246129371},
    {0.6740804995439055, 0.2054956942039116, 0.005100727969608367},
    {0.6740804995439055, 2.9360969593858814, 0.005100727969608367},
    {0.6740804995439055, -0.2054956942039116, 0.005100727969608367},
    {2.4675121540458878, 0.2054956942039116, 0.005100727969608367},
    {0.6740804995439055, -2.9360969593858814, 0.005100727969608367},
    {2.4675121540458878, -0.2054956942039116, 0.005100727969608367},
    {2.4675121540458878, 2.9360969593858814, 0.005100727969608367},
    {2.4675121540458878, -2.9360969593858814, 0.005100727969608367},
    {0.6740804995439055, 1.365300632590985, 0.005100727969608367},
    {0.6740804995439055, 1.7762920209988082, 0.005100727969608367},
    {0.6740804995439055, -1.365300632590985, 0.005100727969608367},
    {2.4675121540458878, 1.365300632590985, 0.005100727969608367},
    {0.6740804995439055, -1.7762920209988082, 0.005100727969608367},
    {2.4675121540458878, -1.365300632590985, 0.005100727969608367},
    {2.4675121540458878, 1.7762920209988082, 0.005100727969608367},
    {2.4675121540458878, -1.7762920209988082, 0.005100727969608367},
    {1.4430841437247115, 0.6637356908666434, 0.005100727969608367},
    {1.4430841437247115, 2.4778569627231497, 0.005100727969608367},
    {1.4430841437247115, -0.6637356908666434, 0.005100727969608367},
    {1.6985085098650816, 0.6637356908666434, 0.005100727969608367},
    {1.4430841437247115, -2.4778569627231497, 0.005100727969608367},
    {1.6985085098650816, -0.6637356908666434, 0.005100727969608367},
    {1.6985085098650816, 2.4778569627231497, 0.005100727969608367},
    {1.6985085098650816, -2.4778569627231497, 0.005100727969608367},
    {0.9134144761372942, 0.16159951926259658, 0.005100727969608367},
    {0.9134144761372942, 2.979993134327197, 0.005100727969608367},
    {0.9134144761372942, -0.16159951926259658, 0.005100727969608367},
    {2.228178177452499, 0.16159951926259658, 0.005100727969608367},
    {0.9134144761372942, -2.979993134327197, 0.005100727969608367},
    {2.228178177452499, -0.16159951926259658, 0.005100727969608367},
    {2.228178177452499, 2.979993134327197, 0.005100727969608367},
    {2.228178177452499, -2.979993134327197, 0.005100727969608367},
    {1.4430841437247115, 0.9070606359282531, 0.005100727969608367},
    {1.4430841437247115, 2.23453201766154, 0.005100727969608367},
    {1.4430841437247115, -0.9070606359282531, 0.005100727969608367},
    {1.6985085098650816, 0.9070606359282531, 0.005100727969608367},
    {1.4430841437247115, -2.23453201766154, 0.005100727969608367},
    {1.6985085098650816, -0.9070606359282531, 0.005100727969608367},
    {1.6985085098650816, 2.23453201766154, 0.005100727969608367},
    {1.6985085098650816, -2.23453201766154, 0.005100727969608367},
    {0.9134144761372942, 1.4091968075323, 0.005100727969608367},
    {0.9134144761372942, 1.7323958460574933, 0.005100727969608367},
    {0.9134144761372942, -1.4091968075323, 0.005100727969608367},
    {2.228178177452499, 1.4091968075323, 0.005100727969608367},
    {0.9134144761372942, -1.7323958460574933, 0.005100727969608367},
    {2.228178177452499, -1.4091968075323, 0.005100727969608367},
    {2.228178177452499, 1.7323958460574933, 0.005100727969608367},
    {2.228178177452499, -1.7323958460574933, 0.005100727969608367},
    {0.7401171418891779, 0.2545548221680612, 0.0051277902278269545},
    {0.7401171418891779, 2.887037831421732, 0.0051277902278269545},
    {0.7401171418891779, -0.2545548221680612, 0.0051277902278269545},
    {2.4014755117006152, 0.2545548221680612, 0.0051277902278269545},
    {0.7401171418891779, -2.887037831421732, 0.0051277902278269545},
    {2.4014755117006152, -0.2545548221680612, 0.0051277902278269545},
    {2.4014755117006152, 2.887037831421732, 0.0051277902278269545},
    {2.4014755117006152, -2.887037831421732, 0.0051277902278269545},
    {0.7401171418891779, 1.3162415046268354, 0.0051277902278269545},
    {0.7401171418891779, 1.825351148962958, 0.0051277902278269545},
    {0.7401171418891779, -1.3162415046268354, 0.0051277902278269545},
    {2.4014755117006152, 1.3162415046268354, 0.0051277902278269545},
    {0.7401171418891779, -1.825351148962958, 0.0051277902278269545},
    {2.4014755117006152, -1.3162415046268354, 0.0051277902278269545},
    {2.4014755117006152, 1.825351148962958, 0.0051277902278269545},
    {2.4014755117006152, -1.825351148962958, 0.0051277902278269545},
    {1.400152029093328, 0.7238336988164873, 0.0051277902278269545},
    {1.400152029093328, 2.417758954773306, 0.0051277902278269545},
    {1.400152029093328, -0.7238336988164873, 0.0051277902278269545},
    {1.741440624496465, 0.7238336988164873, 0.0051277902278269545},
    {1.400152029093328, -2.417758954773306, 0.0051277902278269545},
    {1.741440624496465, -0.7238336988164873, 0.0051277902278269545},
    {1.741440624496465, 2.417758954773306, 0.0051277902278269545},
    {1.741440624496465, -2.417758954773306, 0.0051277902278269545},
    {0.8597287219526738, 0.22605259742113704, 0.0051277902278269545},
    {0.8597287219526738, 2.9155400561686564, 0.0051277902278269545},
    {0.8597287219526738, -0.22605259742113704, 0.0051277902278269545},
    {2.2818639316371194, 0.22605259742113704, 0.0051277902278269545},
    {0.8597287219526738, -2.9155400561686564, 0.0051277902278269545},
    {2.2818639316371194, -0.22605259742113704, 0.0051277902278269545},
    {2.2818639316371194, 2.9155400561686564, 0.0051277902278269545},
    {2.2818639316371194, -2.9155400561686564, 0.0051277902278269545},
    {1.400152029093328, 0.8469626279784093, 0.0051277902278269545},
    {1.400152029093328, 2.294630025611384, 0.0051277902278269545},
    {1.400152029093328, -0.8469626279784093, 0.0051277902278269545},
    {1.741440624496465, 0.8469626279784093, 0.0051277902278269545},
    {1.400152029093328, -2.294630025611384, 0.0051277902278269545},
    {1.741440624496465, -0.8469626279784093, 0.0051277902278269545},
    {1.741440624496465, 2.294630025611384, 0.0051277902278269545},
    {1.741440624496465, -2.294630025611384, 0.0051277902278269545},
    {0.8597287219526738, 1.3447437293737596, 0.0051277902278269545},
    {0.8597287219526738, 1.7968489242160337, 0.0051277902278269545},
    {0.8597287219526738, -1.3447437293737596, 0.0051277902278269545},
    {2.2818639316371194, 1.3447437293737596, 0.0051277902278269545},
    {0.8597287219526738, -1.7968489242160337, 0.0051277902278269545},
    {2.2818639316371194, -1.3447437293737596, 0.0051277902278269545},
    {2.2818639316371194, 1.7968489242160337, 0.0051277902278269545},
    {2.2818639316371194, -1.7968489242160337, 0.0051277902278269545},
    {0.6664875986342098, 0.06906489413179952, 0.00510573994716417},
    {0.6664875986342098, 3.072527759457994, 0.00510573994716417},
    {0.6664875986342098, -0.06906489413179952, 0.00510573994716417},
    {2.4751050549555833, 0.06906489413179952, 0.00510573994716417},
    {0.6664875986342098, -3.072527759457994, 0.00510573994716417},
    {2.4751050549555833, -0.06906489413179952, 0.00510573994716417},
    {2.4751050549555833, 3.072527759457994, 0.00510573994716417},
    {2.4751050549555833, -3.072527759457994, 0.00510573994716417},
    {0.6664875986342098, 1.501731432663097, 0.00510573994716417},
    {0.6664875986342098, 1.639861220926696, 0.00510573994716417},
    {0.6664875986342098, -1.501731432663097, 0.00510573994716417},
    {2.4751050549555833, 1.501731432663097, 0.00510573994716417},
    {0.6664875986342098, -1.639861220926696, 0.00510573994716417},
    {2.4751050549555833, -1.501731432663097, 0.00510573994716417},
    {2.4751050549555833, 1.639861220926696, 0.00510573994716417},
    {2.4751050549555833, -1.639861220926696, 0.00510573994716417},
    {1.5281193847212213, 0.665328077607378, 0.00510573994716417},
    {1.5281193847212213, 2.476264575982415, 0.00510573994716417},
    {1.5281193847212213, -0.665328077607378, 0.00510573994716417},
    {1.6134732688685718, 0.665328077607378, 0.00510573994716417},
    {1.5281193847212213, -2.476264575982415, 0.00510573994716417},
    {1.6134732688685718, -0.665328077607378, 0.00510573994716417},
    {1.6134732688685718, 2.476264575982415, 0.00510573994716417},
    {1.6134732688685718, -2.476264575982415, 0.00510573994716417},
    {0.9061825158925333, 0.05422680846516642, 0.00510573994716417},
    {0.9061825158925333, 3.087365845124627, 0.00510573994716417},
    {0.9061825158925333, -0.05422680846516642, 0.00510573994716417},
    {2.2354101376972597, 0.05422680846516642, 0.00510573994716417},
    {0.9061825158925333, -3.087365845124627, 0.00510573994716417},
    {2.2354101376972597, -0.05422680846516642, 0.00510573994716417},
    {2.2354101376972597, 3.087365845124627, 0.00510573994716417},
    {2.2354101376972597, -3.087365845124627, 0.00510573994716417},
    {1.5281193847212213, 0.9054682491875186, 0.00510573994716417},
    {1.5281193847212213, 2.2361244044022746, 0.00510573994716417},
    {1.5281193847212213, -0.9054682491875186, 0.00510573994716417},
    {1.6134732688685718, 0.9054682491875186, 0.00510573994716417},
    {1.5281193847212213, -2.2361244044022746, 0.00510573994716417},
    {1.6134732688685718, -0.9054682491875186, 0.00510573994716417},
    {1.6134732688685718, 2.2361244044022746, 0.00510573994716417},
    {1.6134732688685718, -2.2361244044022746, 0.00510573994716417},
    {0.9061825158925333, 1.5165695183297303, 0.00510573994716417},
    {0.9061825158925333, 1.625023135260063, 0.00510573994716417},
    {0.9061825158925333, -1.5165695183297303, 0.00510573994716417},
    {2.2354101376972597, 1.5165695183297303, 0.00510573994716417},
    {0.9061825158925333, -1.625023135260063, 0.00510573994716417},
    {2.2354101376972597, -1.5165695183297303, 0.00510573994716417},
    {2.2354101376972597, 1.625023135260063, 0.00510573994716417},
    {2.2354101376972597, -1.625023135260063, 0.00510573994716417},
    {0.7291434125576022, 0.1287179013100888, 0.005136116055710246},
    {0.7291434125576022, 3.0128747522797044, 0.005136116055710246},
    {0.7291434125576022, -0.1287179013100888, 0.005136116055710246},
    {2.412449241032191, 0.1287179013100888, 0.005136116055710246},
    {0.7291434125576022, -3.0128747522797044, 0.005136116055710246},
    {2.412449241032191, -0.1287179013100888, 0.005136116055710246},
    {2.412449241032191, 3.0128747522797044, 0.005136116055710246},
    {2.412449241032191, -3.0128747522797044, 0.005136116055710246},
    {0.7291434125576022, 1.4420784254848078, 0.005136116055710246},
    {0.7291434125576022, 1.6995142281049853, 0.005136116055710246},
    {0.7291434125576022, -1.4420784254848078, 0.005136116055710246},
    {2.412449241032191, 1.4420784254848078, 0.005136116055710246},
    {0.7291434125576022, -1.6995142281049853, 0.005136116055710246},
    {2.412449241032191, -1.4420784254848078, 0.005136116055710246},
    {2.412449241032191, 1.6995142281049853, 0.005136116055710246},
    {2.412449241032191, -1.6995142281049853, 0.005136116055710246},
    {1.485172482613751, 0.725018081273906, 0.005136116055710246},
    {1.485172482613751, 2.4165745723158873, 0.005136116055710246},
    {1.485172482613751, -0.725018081273906, 0.005136116055710246},
    {1.6564201709760424, 0.725018081273906, 0.005136116055710246},
    {1.485172482613751, -2.4165745723158873, 0.005136116055710246},
    {1.6564201709760424, -0.725018081273906, 0.005136116055710246},
    {1.6564201709760424, 2.4165745723158873, 0.005136116055710246},
    {1.6564201709760424, -2.4165745723158873, 0.005136116055710246},
    {0.8490193895882362, 0.11417745988423114, 0.005136116055710246},
    {0.8490193895882362, 3.0274151937055622, 0.005136116055710246},
    {0.8490193895882362, -0.11417745988423114, 0.005136116055710246},
    {2.292573264001557, 0.11417745988423114, 0.005136116055710246},
    {0.8490193895882362, -3.0274151937055622, 0.005136116055710246},
    {2.292573264001557, -0.11417745988423114, 0.005136116055710246},
    {2.292573264001557, 3.0274151937055622, 0.005136116055710246},
    {2.292573264001557, -3.0274151937055622, 0.005136116055710246},
    {1.485172482613751, 0.8457782455209906, 0.005136116055710246},
    {1.485172482613751, 2.2958144080688028, 0.005136116055710246},
    {1.485172482613751, -0.8457782455209906, 0.005136116055710246},
    {1.6564201709760424, 0.8457782455209906, 0.005136116055710246},
    {1.485172482613751, -2.2958144080688028, 0.005136116055710246},
    {1.6564201709760424, -0.8457782455209906, 0.005136116055710246},
    {1.6564201709760424, 2.2958144080688028, 0.005136116055710246},
    {1.6564201709760424, -2.2958144080688028, 0.005136116055710246},
    {0.8490193895882362, 1.4566188669106654, 0.005136116055710246},
    {0.8490193895882362, 1.6849737866791277, 0.005136116055710246},
    {0.8490193895882362, -1.4566188669106654, 0.005136116055710246},
    {2.292573264001557, 1.4566188669106654, 0.005136116055710246},
    {0.8490193895882362, -1.6849737866791277, 0.005136116055710246},
    {2.292573264001557, -1.4566188669106654, 0.005136116055710246},
    {2.292573264001557, 1.6849737866791277, 0.005136116055710246},
    {2.292573264001557, -1.6849737866791277, 0.005136116055710246},
};

}  // namespace ambiarray::detail
