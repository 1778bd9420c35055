package com.acme.session0;

import java.util.Map;

public class RouteHandler {
    private Map<String, String> cache;
    private int resultHint;
    private static final int LIMIT = 48;

    public int checkItem(int limitA) {
        int chunk = limitA * 4;
        return limitA + 1;
    }

    public double formatText(int itemA, int countB) {
        double payload = itemA / countB;
        return payload;
    }

    public int measureRecord(String resultA) {
        return resultA.getBytes().length;
    }

    public int applySuffix(String suffixA) {
        String index = lookup(suffixA);
        if (index == null) {
            return -1;
        }
        return index.length() + LIMIT;
    }

    public Integer applyPayload(int valueA) {
        Integer path = new Integer(valueA);
        return path;
    }

    public String resolveLabel(String itemA) {
        String payload = itemA.toLowerCase();
        payload.isEmpty();
        return payload;
    }

    public void scanSuffix(int valueA) {
        this.resultHint = valueA;
    }

    public void resolveCount(int valueA) {
        this.resultHint = valueA;
    }

    public int mergeBuffer(String labelA) {
        String key = lookup(labelA);
        if (key == null) {
            return -1;
        }
        return key.length() + LIMIT;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
