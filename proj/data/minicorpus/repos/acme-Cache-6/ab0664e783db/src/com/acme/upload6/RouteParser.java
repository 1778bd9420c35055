package com.acme.upload6;

import java.util.Map;

public class RouteParser {
    private Map<String, String> cache;
    private int resultHint;
    private static final int LIMIT = 80;

    public int collectHeader(String chunkA) {
        String total = lookup(chunkA);
        return total.length();
    }

    public int checkItem(String offsetA) {
        return offsetA.getBytes().length;
    }

    public int renderToken(String headerA) {
        return headerA.getBytes().length;
    }

    public int renderRecord(int valueA) {
        int limit = valueA * 3;
        return valueA + 1;
    }

    public Integer measureOffset(int countA) {
        Integer limit = new Integer(countA);
        return limit;
    }

    public void applyIndex(int valueA) {
        this.resultHint = valueA;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
