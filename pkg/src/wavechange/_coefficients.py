"""Scaling-filter coefficients (generated by scripts/generate_coefficients.py; do not edit)."""

SCALING_FILTERS = {
    ("daubechies", 2): (
        4.82962913144534143374871599864e-1,
        8.36516303737807905575293780917e-1,
        2.2414386804201338102597276224e-1,
        -1.29409522551260381174449418812e-1,
    ),
    ("daubechies", 3): (
        3.32670552950082615998511589139e-1,
        8.06891509311092576494493604089e-1,
        4.59877502118491570095151942148e-1,
        -1.35011020010254588696389906699e-1,
        -8.54412738820266616928191691818e-2,
        3.52262918857095366027406647155e-2,
    ),
    ("daubechies", 4): (
        2.30377813308896500863291183044e-1,
        7.14846570552915647089921955274e-1,
        6.30880767929858907881716338301e-1,
        -2.79837694168598542114137471801e-2,
        -1.87034811719093084079570672789e-1,
        3.0841381835560763627219362535e-2,
        3.28830116668851997354075135492e-2,
        -1.0597401785069032104883208524e-2,
    ),
    ("daubechies", 5): (
        1.6010239797419291448072374802e-1,
        6.03829269797189670540119306525e-1,
        7.24308528437772927728071244102e-1,
        1.38428145901320731505397146339e-1,
        -2.42294887066382031862571379475e-1,
        -3.22448695846383746484797550621e-2,
        7.75714938400457135231304893886e-2,
        -6.24149021279827427419051911292e-3,
        -1.25807519990819994685097399318e-2,
        3.33572528547377127799818341582e-3,
    ),
    ("daubechies", 6): (
        1.11540743350109463621323917241e-1,
        4.94623890398453085677204176878e-1,
        7.5113390802109535067893449844e-1,
        3.15250351709197629085989654811e-1,
        -2.26264693965439820076314500661e-1,
        -1.29766867567261935562289605877e-1,
        9.75016055873230491023435525381e-2,
        2.75228655303057286255408395042e-2,
        -3.15820393174860295650790806998e-2,
        5.53842201161496139251918398047e-4,
        4.77725751094551063963597524682e-3,
        -1.07730108530847956485262160959e-3,
    ),
    ("daubechies", 7): (
        7.78520540850091790199635219579e-2,
        3.96539319481917306539000390937e-1,
        7.29132090846235119916943070339e-1,
        4.69782287405193122471591160974e-1,
        -1.43906003928564975405068362213e-1,
        -2.24036184993874982638140420233e-1,
        7.13092192668302647508765705011e-2,
        8.06126091510830719129224803594e-2,
        -3.80299369350144135795920616019e-2,
        -1.65745416306668806541076748917e-2,
        1.25509985560998406129898860342e-2,
        4.2957797292136652113212912282e-4,
        -1.80164070404749091526826291274e-3,
        3.53713799974520248446295836306e-4,
    ),
    ("daubechies", 8): (
        5.4415842243104009955009405203e-2,
        3.12871590914299970659162375506e-1,
        6.75630736297289806807800767047e-1,
        5.85354683654206712771265520045e-1,
        -1.58291052563493056673805478765e-2,
        -2.84015542961546926516203132374e-1,
        4.72484573913282770360590009826e-4,
        1.2874742662047845885702928751e-1,
        -1.73693010018075461696161488681e-2,
        -4.4088253930794751506763723239e-2,
        1.39810279173982816487229305726e-2,
        8.74609404740577671638274324648e-3,
        -4.87035299345157431042218155711e-3,
        -3.91740373376947046298080357324e-4,
        6.75449406450569366369547573879e-4,
        -1.17476784124769533730628231699e-4,
    ),
    ("daubechies", 9): (
        3.80779473638783465886976588796e-2,
        2.43834674612590353732041581649e-1,
        6.04823123690111111903076867434e-1,
        6.57288078051300538078212639045e-1,
        1.331973858250075761909549459e-1,
        -2.93273783279174908806403195242e-1,
        -9.68407832229764605135081335377e-2,
        1.48540749338106380135072717506e-1,
        3.07256814793333792123174007204e-2,
        -6.76328290613299736756422748297e-2,
        2.50947114831451957587189749989e-4,
        2.23616621236790972053737827027e-2,
        -4.72320475775139727792570784824e-3,
        -4.28150368246342983449679500231e-3,
        1.84764688305622647661912949113e-3,
        2.30385763523195967205216392825e-4,
        -2.51963188942710136974988684288e-4,
        3.93473203162715994806898830659e-5,
    ),
    ("daubechies", 10): (
        2.66700579005555535866174487713e-2,
        1.88176800077691489020892973679e-1,
        5.2720118893172558648174482796e-1,
        6.88459039453603565741871782549e-1,
        2.81172343660577460748726998446e-1,
        -2.49846424327315379416101897921e-1,
        -1.95946274377377043504299254319e-1,
        1.27369340335793260082677233201e-1,
        9.30573646035723511603522898355e-2,
        -7.13941471663970871453360930761e-2,
        -2.94575368218758128582832376014e-2,
        3.32126740593410017397636531822e-2,
        3.60655356695616965542329141713e-3,
        -1.07331754833305750443181141065e-2,
        1.39535174705290116578931844796e-3,
        1.99240529518505611715874224264e-3,
        -6.85856694959711626561370981927e-4,
        -1.16466855129285450951480971026e-4,
        9.35886703200695913340501303422e-5,
        -1.32642028945212448124366753123e-5,
    ),
    ("least_asymmetric", 8): (
        -7.57657147895022132277461978187e-2,
        -2.96355276460024917643691831246e-2,
        4.97618667632774989979605458081e-1,
        8.03738751805132080878805629735e-1,
        2.97857795605306051402901199293e-1,
        -9.92195435766335325852080070446e-2,
        -1.26039672620313037539160974504e-2,
        3.22231006040514678716159225393e-2,
    ),
    ("least_asymmetric", 10): (
        2.73330683449987688184933878631e-2,
        2.95194909257062612500337720319e-2,
        -3.91342493023138436244260592018e-2,
        1.99397533976855596895064775418e-1,
        7.23407690404040792074113212584e-1,
        6.33978963456792063717485188113e-1,
        1.66021057645108481334628603098e-2,
        -1.75328089908056224237492950228e-1,
        -2.11018340246890410007990394507e-2,
        1.95388827352498267757535767707e-2,
    ),
    ("least_asymmetric", 12): (
        1.54041093270448242992452550372e-2,
        3.49071208422216251531622467676e-3,
        -1.17990111148520025404242937291e-1,
        -4.83117425856980549710486915443e-2,
        4.91055941927973733041947976975e-1,
        7.87641141028650996071844858218e-1,
        3.37929421728165832714425796426e-1,
        -7.26375227863765834640394074803e-2,
        -2.10602925123708479915377378665e-2,
        4.4724901770781384662992376082e-2,
        1.76771186425400774100600882456e-3,
        -7.80070832503238041422099784771e-3,
    ),
    ("least_asymmetric", 14): (
        1.02681767084648162314347547848e-2,
        4.01024487152239516777983502857e-3,
        -1.07808237703289712548565515687e-1,
        -1.40047240442933654141767731149e-1,
        2.88629631750647874697808301599e-1,
        7.67764317004882931173427384967e-1,
        5.361019170905692306633096385e-1,
        1.74412550868357068505249628433e-2,
        -4.95528349370428323013651422263e-2,
        6.78926935012205649045009440046e-2,
        3.05155131658778857447595198249e-2,
        -1.26363034032405665827321822401e-2,
        -1.04738488867973808653719469044e-3,
        2.68181456826014702911114865039e-3,
    ),
    ("least_asymmetric", 16): (
        -3.38241595100500259545769923592e-3,
        -5.42132331800010689347836944017e-4,
        3.16950878115259914314257075239e-2,
        7.60748732497660819192100801219e-3,
        -1.43294238351272662844095544399e-1,
        -6.12733590678110778430467690737e-2,
        4.81359651259053391589568580265e-1,
        7.77185751699628028624333566639e-1,
        3.64441894836178936759559432384e-1,
        -5.19458381078818007357107290626e-2,
        -2.72190299171034863219641242162e-2,
        4.91371796737302867869109881552e-2,
        3.80875201389448946307192222305e-3,
        -1.49522583370621991184902982247e-2,
        -3.02920514724133081263912439957e-4,
        1.88995033276768918427443260325e-3,
    ),
    ("least_asymmetric", 18): (
        1.40091552591465623126081830905e-3,
        6.19780888985507080944108846121e-4,
        -1.32719677818171338056781852518e-2,
        -1.15282102076791861431941460845e-2,
        3.02248788582751881348303733103e-2,
        5.83462746124981831023641061167e-4,
        -5.45689584308333510968662161663e-2,
        2.38760914607305166255629123975e-1,
        7.17897082764412404662709662687e-1,
        6.17338449140934151320849683091e-1,
        3.52724880352710426894223980918e-2,
        -1.9155083129728433494528705802e-1,
        -1.8233770779395505569829979603e-2,
        6.20777893028857475700136471927e-2,
        8.85926749340026669718430819048e-3,
        -1.02640640276331204850033833088e-2,
        -4.73154498680043542188817462849e-4,
        1.06949003290861191586874535184e-3,
    ),
    ("least_asymmetric", 20): (
        7.70159809114459822578640653396e-4,
        9.56326707228527307845044051482e-5,
        -8.64129927702215026098064864869e-3,
        -1.46538258130461051358344233518e-3,
        4.59272392310915085851588722895e-2,
        1.16098939037113180635270706457e-2,
        -1.59494278884910609464782473565e-1,
        -7.08805357832315722860176490727e-2,
        4.71690666938442910001031850536e-1,
        7.69510037021097936783874189691e-1,
        3.83826761067076326256541778019e-1,
        -3.55367404738195858161560398262e-2,
        -3.19900568824281139214528451623e-2,
        4.99949720773751562766264056867e-2,
        5.76491203358114967199207969985e-3,
        -2.03549398123111107454879975936e-2,
        -8.0435893201645129605761059546e-4,
        4.59317358531179194746978838154e-3,
        5.70360836184950068147188787915e-5,
        -4.59329421004652040192467877486e-4,
    ),
    ("coiflet", 1): (
        -7.27326195125264480244393752533e-2,
        3.37897662457481769674756011043e-1,
        8.52572020211600420449723112612e-1,
        3.84864846864857747251754521072e-1,
        -7.27326195125264480244393752533e-2,
        -1.56557281357919925256661700098e-2,
    ),
    ("coiflet", 2): (
        1.63873364632036404274884491142e-2,
        -4.1464936786871774009712846978e-2,
        -6.73725547237255938045636257501e-2,
        3.86110066822762850419041495332e-1,
        8.12723635449413495344214373963e-1,
        4.17005184423239048047809530556e-1,
        -7.64885990782807542776127722171e-2,
        -5.94344186464310873068550096712e-2,
        2.36801719468477688059277662878e-2,
        5.61143481936883424563494860378e-3,
        -1.8232088709110320946098292934e-3,
        -7.20549445520346995073755737545e-4,
    ),
    ("coiflet", 3): (
        -3.7935128643808016754851278469e-3,
        7.7825964256727457565557267774e-3,
        2.34526961420771662427503658683e-2,
        -6.57719112814693671835016012946e-2,
        -6.11233900029725412769257018083e-2,
        4.05176902409118199272476180955e-1,
        7.93777222626087174791808049146e-1,
        4.28483476377369981014779056526e-1,
        -7.17998216191548340132367641902e-2,
        -8.23019271062998184866387773814e-2,
        3.45550275732977330127285765496e-2,
        1.5880544863669450941866748832e-2,
        -9.00797613673062389869059131674e-3,
        -2.57451768813679701027860332433e-3,
        1.11751877083063022350674708625e-3,
        4.66216959820402869469087738719e-4,
        -7.09833025063790056111913832224e-5,
        -3.45997731972727738834567237618e-5,
    ),
    ("coiflet", 4): (
        8.92313902537002964434356686513e-4,
        -1.62949242522678581232135440871e-3,
        -7.34616793626804976887152334961e-3,
        1.60689471315750265128776307192e-2,
        2.66823046696048326070348639905e-2,
        -8.12667102491937233447595228158e-2,
        -5.60773196035692556597051760655e-2,
        4.15308427000682273129469296405e-1,
        7.82238934424282589826475762375e-1,
        4.34386033114356542442918092794e-1,
        -6.66274723668171566042563330092e-2,
        -9.62204245359526369601446674693e-2,
        3.93344226055891463313266841813e-2,
        2.50822533379496068182119176992e-2,
        -1.52117281876972115972357765707e-2,
        -5.65828380013088370685520845045e-3,
        3.75143469714608634917914834535e-3,
        1.26656107892566020602129895094e-3,
        -5.89020224633216477985278808338e-4,
        -2.59974337122256803196801325833e-4,
        6.2338854312787181125936675543e-5,
        3.12298615991952653049475548892e-5,
        -3.25964794003075067830234593072e-6,
        -1.78499091449334668126754831734e-6,
    ),
    ("coiflet", 5): (
        -2.12081862067493999648190294414e-4,
        3.58577741161757691268221256818e-4,
        2.17829437784569476039539834748e-3,
        -4.15931262757863965550073295938e-3,
        -1.01315848469002749146821228789e-2,
        2.34083221189277830779915980117e-2,
        2.8169744270532351893675163271e-2,
        -9.19215880600860832957269431437e-2,
        -5.20466702535547566511181974078e-2,
        4.21571266730754351773068941428e-1,
        7.74293622860327451602926540604e-1,
        4.37982306659163317926822376811e-1,
        -6.20377515749819508925340568803e-2,
        -1.05563151307337226469606042434e-1,
        4.12875304721178314690206848324e-2,
        3.26747994670573509536561422128e-2,
        -1.97583916009654651389047406899e-2,
        -9.15950733867616299494402122283e-3,
        6.76152022062041680244768896724e-3,
        2.43157544253828849057946143096e-3,
        -1.66162730392987877456474532861e-3,
        -6.37558926125881109171189352266e-4,
        3.01857941668244749863250067639e-4,
        1.40356328123732426990288009823e-4,
        -4.12198619242655021970132036155e-5,
        -2.12702216725156138191910478671e-5,
        3.70072771133947951644979631766e-6,
        2.06122039857887815670338084962e-6,
        -1.62379951720483351747097389137e-7,
        -9.6040101127678921250276359453e-8,
    ),
}
