; j runs twice as fast as k
(declare-var j Int)
(declare-var k Int)
(init (and (= j 0) (= k 0)))
(trans (and (= j' (+ j 2)) (= k' (+ k 1))))
(good (= j (* 2 k)))
